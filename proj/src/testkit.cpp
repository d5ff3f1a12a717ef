#include "pcpred/testkit.hpp"

#include <algorithm>
#include <functional>

namespace pcpred::testkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t SplitMix64::below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

std::size_t SplitMix64::between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

Str random_string(SplitMix64& rng, std::size_t alphabet_size, std::size_t min_len, std::size_t max_len) {
  Str s(rng.between(min_len, max_len));
  for (Symbol& a : s) a = rng.below(alphabet_size);
  return s;
}

Card random_card(SplitMix64& rng, std::size_t alphabet_size, std::size_t max_side_len) {
  Card c;
  c.top = random_string(rng, alphabet_size, 0, max_side_len);
  c.bot = random_string(rng, alphabet_size, 0, max_side_len);
  return c;
}

Stack random_stack(SplitMix64& rng, std::size_t alphabet_size, std::size_t max_cards, std::size_t max_side_len) {
  Stack s(rng.between(0, max_cards));
  for (Card& c : s) c = random_card(rng, alphabet_size, max_side_len);
  return s;
}

PcpInstance gen_pcp(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  PcpInstance p;
  p.cards.resize(rng.between(1, c.max_cards));
  for (Card& card : p.cards) card = random_card(rng, c.alphabet_size, c.max_side_len);
  return p;
}

namespace {

// k lengths in [0, cap] summing to n (requires n <= k * cap).
std::vector<std::size_t> random_composition(SplitMix64& rng, std::size_t n, std::size_t k, std::size_t cap) {
  std::vector<std::size_t> parts(k, 0);
  for (std::size_t unit = 0; unit < n; ++unit) {
    std::size_t i = rng.below(k);
    while (parts[i] == cap) i = (i + 1) % k;
    ++parts[i];
  }
  return parts;
}

}  // namespace

PlantedPcp gen_pcp_planted(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  const std::size_t cap = std::max<std::size_t>(c.max_side_len, 1);
  const std::size_t k = rng.between(1, std::max<std::size_t>(c.max_cards, 1));
  const std::size_t n = rng.between(1, k * cap);
  const Str common = random_string(rng, c.alphabet_size, n, n);
  const auto tops = random_composition(rng, n, k, cap);
  const auto bots = random_composition(rng, n, k, cap);

  Stack match;
  std::size_t ti = 0, bi = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Card card{Str(common.begin() + static_cast<std::ptrdiff_t>(ti), common.begin() + static_cast<std::ptrdiff_t>(ti + tops[i])),
              Str(common.begin() + static_cast<std::ptrdiff_t>(bi), common.begin() + static_cast<std::ptrdiff_t>(bi + bots[i]))};
    ti += tops[i];
    bi += bots[i];
    match.push_back(std::move(card));
  }

  PlantedPcp out;
  for (const Card& card : match)
    if (std::find(out.instance.cards.begin(), out.instance.cards.end(), card) == out.instance.cards.end())
      out.instance.cards.push_back(card);
  for (std::size_t i = out.instance.cards.size(); i > 1; --i)
    std::swap(out.instance.cards[i - 1], out.instance.cards[rng.below(i)]);
  for (const Card& card : match) {
    auto it = std::find(out.instance.cards.begin(), out.instance.cards.end(), card);
    out.plant.push_back(static_cast<std::size_t>(it - out.instance.cards.begin()));
  }
  return out;
}

namespace {

std::vector<Card> random_rules(SplitMix64& rng, const GenConfig& c) {
  std::vector<Card> rules(rng.between(1, c.max_cards));
  for (Card& r : rules) r = random_card(rng, c.alphabet_size, c.max_side_len);
  return rules;
}

Str random_walk(SplitMix64& rng, const std::vector<Card>& rules, Str x, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<Str> next;
    for (std::size_t cut = 0; cut <= x.size(); ++cut)
      for (std::size_t r = 0; r < rules.size(); ++r)
        if (auto y = apply_step(rules, x, {r, cut})) next.push_back(std::move(*y));
    if (next.empty()) break;
    x = next[rng.below(next.size())];
  }
  return x;
}

}  // namespace

SrInstance gen_srs(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  SrInstance s;
  s.rules = random_rules(rng, c);
  s.from = random_string(rng, c.alphabet_size, 1, c.max_side_len + 1);
  if (rng.coin())
    s.to = random_walk(rng, s.rules, s.from, rng.between(0, 3));
  else
    s.to = random_string(rng, c.alphabet_size, 0, c.max_side_len + 1);
  return s;
}

SrhInstance gen_srh(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  SrhInstance s;
  s.rules = random_rules(rng, c);
  s.from = random_string(rng, c.alphabet_size, 1, c.max_side_len + 1);
  s.target = rng.below(c.alphabet_size);
  return s;
}

SrhPrimeInstance gen_srh_prime(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  SrhPrimeInstance s;
  s.rules = random_rules(rng, c);
  s.from = random_string(rng, c.alphabet_size, 1, c.max_side_len + 1);
  s.targets = random_string(rng, c.alphabet_size, 0, 2);
  return s;
}

MpcpInstance gen_mpcp(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  MpcpInstance m;
  if (rng.coin()) {
    GenConfig pc = c;
    pc.seed = rng.next();
    PlantedPcp p = gen_pcp_planted(pc);
    m.first = p.instance.cards[p.plant.front()];
    m.cards = p.instance.cards;
    return m;
  }
  m.first = random_card(rng, c.alphabet_size, c.max_side_len);
  m.cards.resize(rng.between(0, c.max_cards));
  for (Card& card : m.cards) card = random_card(rng, c.alphabet_size, c.max_side_len);
  return m;
}

TmInstance gen_tm(const GenConfig& c) {
  SplitMix64 rng(c.seed);
  TmInstance t;
  TmSpec& m = t.machine;
  const std::size_t s = rng.between(1, std::max<std::size_t>(c.alphabet_size, 1));
  const std::size_t q = rng.between(1, std::max<std::size_t>(c.max_states, 1));
  for (std::size_t i = 0; i < s; ++i) m.tape_alphabet.push_back(i);
  for (std::size_t i = 0; i < q; ++i) m.states.push_back(s + i);
  m.start = m.states.front();
  if (rng.coin()) {
    for (Symbol st : m.states)
      if (rng.coin()) m.halting.push_back(st);
    if (m.halting.empty()) m.halting.push_back(m.states[rng.below(q)]);
  }
  auto random_transition = [&] {
    Transition tr;
    tr.next = m.states[rng.below(q)];
    std::size_t w = rng.below(s + 1);
    tr.write = w == s ? Cell{} : Cell{m.tape_alphabet[w]};
    tr.move = static_cast<Move>(rng.below(3));
    return tr;
  };
  for (Symbol st : m.states) {
    if (m.is_halting(st)) continue;
    m.delta[{st, std::nullopt}] = random_transition();
    for (Symbol a : m.tape_alphabet) m.delta[{st, a}] = random_transition();
  }
  t.input = random_string(rng, s, 0, 2);
  return t;
}

std::vector<StackWitness> oracle_pcp(const PcpInstance& inst, std::size_t k) {
  std::vector<StackWitness> out;
  StackWitness w;
  std::function<void(std::size_t)> go = [&](std::size_t len) {
    if (w.size() == len) {
      Stack s;
      for (std::size_t i : w) s.push_back(inst.cards[i]);
      if (trace_top(s) == trace_bot(s)) out.push_back(w);
      return;
    }
    for (std::size_t i = 0; i < inst.cards.size(); ++i) {
      w.push_back(i);
      go(len);
      w.pop_back();
    }
  };
  for (std::size_t len = 1; len <= k; ++len) go(len);
  return out;
}

std::optional<std::size_t> oracle_sr_distance(const SrInstance& inst, std::size_t max_steps, std::size_t max_len) {
  std::optional<std::size_t> best;
  std::function<void(const Str&, std::size_t)> go = [&](const Str& x, std::size_t depth) {
    if (x == inst.to) {
      if (!best || depth < *best) best = depth;
      return;
    }
    if (depth == max_steps) return;
    for (std::size_t i = 0; i <= x.size(); ++i) {
      for (const Card& r : inst.rules) {
        if (i + r.top.size() > x.size()) continue;
        if (!std::equal(r.top.begin(), r.top.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        Str y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
        y.insert(y.end(), r.bot.begin(), r.bot.end());
        y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(i + r.top.size()), x.end());
        if (y.size() <= max_len) go(y, depth + 1);
      }
    }
  };
  go(inst.from, 0);
  return best;
}

}  // namespace pcpred::testkit
