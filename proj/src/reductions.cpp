#include "pcpred/reductions.hpp"

#include <algorithm>

#include "pcpred/solvers.hpp"

namespace pcpred {

Symbol ReductionTrace::fresh_symbol(std::string_view role) const {
  for (const auto& [name, sym] : fresh)
    if (name == role) return sym;
  throw ReductionError("reduction trace has no fresh symbol '" + std::string(role) + "'");
}

namespace {

void require(const CheckResult& r, std::string_view what) {
  if (!r) throw ReductionError(std::string(what) + ": " + r.reason);
}

void require(bool cond, std::string_view what) {
  if (!cond) throw ReductionError(std::string(what));
}

std::vector<std::optional<std::size_t>> identity_map(std::size_t n) {
  std::vector<std::optional<std::size_t>> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

Str rule_symbols(const std::vector<Card>& rules) {
  Str out;
  for (const Card& c : rules) {
    out.insert(out.end(), c.top.begin(), c.top.end());
    out.insert(out.end(), c.bot.begin(), c.bot.end());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SRH -> SR

ReductionOutput<SrInstance> reduce_srh_to_sr(const SrhInstance& src) {
  const Symbol a0 = src.target;
  Alphabet sigma_ = alphabet_of(src.rules);
  extend_alphabet(sigma_, src.from);
  extend_alphabet(sigma_, Str{a0});

  ReductionOutput<SrInstance> out;
  out.instance.rules = src.rules;
  for (Symbol a : sigma_) out.instance.rules.push_back({{a, a0}, {a0}});
  for (Symbol a : sigma_) out.instance.rules.push_back({{a0, a}, {a0}});
  out.instance.from = src.from;
  out.instance.to = {a0};
  out.trace.alphabet = sigma_;
  out.trace.card_map = identity_map(src.rules.size());
  return out;
}

SrDerivation srh_to_sr_witness_fwd(const SrhInstance& src, const ReductionOutput<SrInstance>& out,
                                   const SrDerivation& d) {
  require(check_srh(src, d), "source derivation rejected");
  const Str y = replay(src.rules, src.from, d).last();
  const Alphabet& sigma_ = out.trace.alphabet;
  const std::size_t left_base = src.rules.size();
  const std::size_t right_base = left_base + sigma_.size();

  SrDerivation result = d;
  const std::size_t p = static_cast<std::size_t>(std::find(y.begin(), y.end(), src.target) - y.begin());
  // Delete the left neighbours nearest first, then the right ones.
  for (std::size_t i = p; i-- > 0;) {
    std::size_t k = index_of(sigma_, y[i]);
    require(k < sigma_.size(), "symbol outside the reduction alphabet");
    result.push_back({left_base + k, i});
  }
  for (std::size_t i = p + 1; i < y.size(); ++i) {
    std::size_t k = index_of(sigma_, y[i]);
    require(k < sigma_.size(), "symbol outside the reduction alphabet");
    result.push_back({right_base + k, 0});
  }
  require(check_sr(out.instance, result), "translated derivation rejected");
  return result;
}

SrDerivation srh_to_sr_witness_bwd(const SrhInstance& src, const ReductionOutput<SrInstance>& out,
                                   const SrDerivation& d) {
  require(check_sr(out.instance, d), "target derivation rejected");
  auto absorb = std::find_if(d.begin(), d.end(), [&](const RewriteStep& s) { return s.rule >= src.rules.size(); });
  SrDerivation result(d.begin(), absorb);
  require(check_srh(src, result), "truncated derivation rejected");
  return result;
}

// ---------------------------------------------------------------------------
// SR -> MPCP

namespace {

struct MpcpLayout {
  std::size_t rules;
  std::size_t hash_card() const { return 2 + rules; }
  std::size_t copy_card(std::size_t k) const { return 3 + rules + k; }
};

}  // namespace

ReductionOutput<MpcpInstance> reduce_sr_to_mpcp(const SrInstance& src) {
  // Strings first, then rules: the copy cards follow the order in which
  // symbols appear in the start string.
  Alphabet sigma_ = alphabet_of({src.from, src.to});
  extend_alphabet(sigma_, src.rules);
  const Symbol hash = fresh(sigma_);
  const Symbol dollar = fresh(concat(sigma_, {hash}));

  ReductionOutput<MpcpInstance> out;
  MpcpInstance& m = out.instance;
  m.first = {{dollar}, concat({{dollar}, src.from, {hash}})};
  m.cards.push_back({concat(src.to, {hash, dollar}), {dollar}});
  m.cards.insert(m.cards.end(), src.rules.begin(), src.rules.end());
  m.cards.push_back({{hash}, {hash}});
  for (Symbol a : sigma_) m.cards.push_back({{a}, {a}});

  out.trace.fresh = {{"hash", hash}, {"dollar", dollar}};
  out.trace.alphabet = sigma_;
  for (std::size_t r = 0; r < src.rules.size(); ++r) out.trace.card_map.push_back(2 + r);
  return out;
}

StackWitness sr_to_mpcp_witness_fwd(const SrInstance& src, const ReductionOutput<MpcpInstance>& out,
                                    const SrDerivation& d) {
  require(check_sr(src, d), "source derivation rejected");
  const Alphabet& sigma_ = out.trace.alphabet;
  const MpcpLayout layout{src.rules.size()};
  const Replay r = replay(src.rules, src.from, d);

  auto copy = [&](Symbol a) {
    std::size_t k = index_of(sigma_, a);
    require(k < sigma_.size(), "symbol outside the reduction alphabet");
    return layout.copy_card(k);
  };

  StackWitness w;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Str& s = r.strings[i];
    const RewriteStep step = d[i];
    for (std::size_t j = 0; j < step.cut; ++j) w.push_back(copy(s[j]));
    w.push_back(*out.trace.card_map[step.rule]);
    for (std::size_t j = step.cut + src.rules[step.rule].top.size(); j < s.size(); ++j) w.push_back(copy(s[j]));
    w.push_back(layout.hash_card());
  }
  w.push_back(1);
  require(check_mpcp(out.instance, w), "translated stack rejected");
  return w;
}

SrDerivation sr_to_mpcp_witness_bwd(const SrInstance& src, const ReductionOutput<MpcpInstance>& out,
                                    const StackWitness& w) {
  require(check_mpcp(out.instance, w), "target stack rejected");
  const Alphabet& sigma_ = out.trace.alphabet;
  const MpcpLayout layout{src.rules.size()};

  // Upper trace = x # y (lower trace) for the remaining stack; the current
  // rewriting string is y x.
  Str x = src.from;
  Str y;
  SrDerivation d;
  bool closed = false;
  for (std::size_t pos = 0; pos < w.size() && !closed; ++pos) {
    const std::size_t t = w[pos];
    const std::string where = " at stack position " + std::to_string(pos);
    if (t == 0) {
      throw ReductionError("first card reused" + where);
    } else if (t == 1) {
      require(x == src.to && y.empty(), "closing card does not meet the target string" + where);
      closed = true;
    } else if (t < layout.hash_card()) {
      const std::size_t rule = t - 2;
      const Card& c = src.rules[rule];
      require(is_prefix(c.top, x), "rule card does not match the pending string" + where);
      d.push_back({rule, y.size()});
      x.erase(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(c.top.size()));
      y.insert(y.end(), c.bot.begin(), c.bot.end());
    } else if (t == layout.hash_card()) {
      require(x.empty(), "line closed before the pending string was consumed" + where);
      x = std::move(y);
      y.clear();
    } else {
      const Symbol a = sigma_.at(t - layout.copy_card(0));
      require(!x.empty() && x.front() == a, "copy card does not match the pending string" + where);
      x.erase(x.begin());
      y.push_back(a);
    }
  }
  require(closed, "stack never reaches the closing card");
  require(check_sr(src, d), "decoded derivation rejected");
  return d;
}

// ---------------------------------------------------------------------------
// MPCP -> PCP

ReductionOutput<PcpInstance> reduce_mpcp_to_pcp(const MpcpInstance& src) {
  const std::vector<Card> all = src.all_cards();
  const Alphabet sigma_ = alphabet_of(all);
  const Symbol hash = fresh(sigma_);
  const Symbol dollar = fresh(concat(sigma_, {hash}));

  ReductionOutput<PcpInstance> out;
  auto& cards = out.instance.cards;
  cards.push_back({concat({dollar}, hash_pre(hash, src.first.top)), concat({dollar, hash}, hash_post(hash, src.first.bot))});
  cards.push_back({{hash, dollar}, {dollar}});
  for (const Card& c : all) {
    if (c.top.empty() && c.bot.empty()) {
      out.trace.card_map.push_back(std::nullopt);
      continue;
    }
    out.trace.card_map.push_back(cards.size());
    cards.push_back({hash_pre(hash, c.top), hash_post(hash, c.bot)});
  }
  out.trace.fresh = {{"hash", hash}, {"dollar", dollar}};
  out.trace.alphabet = sigma_;
  return out;
}

StackWitness mpcp_to_pcp_witness_fwd(const MpcpInstance& src, const ReductionOutput<PcpInstance>& out,
                                     const StackWitness& w) {
  require(check_mpcp(src, w), "source stack rejected");
  StackWitness b{0};
  for (std::size_t j : w)
    if (auto t = out.trace.card_map.at(j)) b.push_back(*t);
  b.push_back(1);
  require(check_pcp(out.instance, b), "translated stack rejected");
  return b;
}

StackWitness mpcp_to_pcp_witness_bwd(const MpcpInstance& src, const ReductionOutput<PcpInstance>& out,
                                     const StackWitness& w) {
  require(check_pcp(out.instance, w), "target stack rejected");
  require(w.front() == 0, "match does not start with the first card d");
  const Symbol hash = out.trace.fresh_symbol("hash");
  const std::vector<Card> all = src.all_cards();

  StackWitness a;
  bool closed = false;
  for (std::size_t pos = 1; pos < w.size() && !closed; ++pos) {
    const std::size_t t = w[pos];
    if (t == 1) {
      closed = true;
      continue;
    }
    require(t != 0, "first card d reused at stack position " + std::to_string(pos));
    auto it = std::find(out.trace.card_map.begin(), out.trace.card_map.end(), std::optional<std::size_t>(t));
    require(it != out.trace.card_map.end(), "card " + std::to_string(t) + " has no source card");
    const std::size_t j = static_cast<std::size_t>(it - out.trace.card_map.begin());
    const Card& target = out.instance.cards[t];
    require(target.top == hash_pre(hash, all[j].top) && target.bot == hash_post(hash, all[j].bot),
            "card " + std::to_string(t) + " is not the hashed image of its source card");
    a.push_back(j);
  }
  require(closed, "match never reaches the closing card e");
  require(check_mpcp(src, a), "decoded stack rejected");
  return a;
}

// ---------------------------------------------------------------------------
// PCP -> CFP / CFI

std::vector<Card> gamma_reverse(std::span<const Card> stack) {
  std::vector<Card> out;
  for (const Card& c : stack) out.push_back({c.top, reverse(c.bot)});
  return out;
}

std::vector<Card> gamma_first(std::span<const Card> stack, Symbol h) {
  std::vector<Card> out;
  for (const Card& c : stack) out.push_back({c.top, concat({c.top, {h}, c.bot, {h}})});
  return out;
}

std::vector<Card> gamma_second(std::span<const Card> stack, Symbol h) {
  std::vector<Card> out;
  for (const Card& c : stack) out.push_back({c.bot, concat({c.top, {h}, c.bot, {h}})});
  return out;
}

Str gamma_flatten(std::span<const Card> stack, Symbol h) {
  Str out;
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    out.insert(out.end(), it->top.begin(), it->top.end());
    out.push_back(h);
    out.insert(out.end(), it->bot.begin(), it->bot.end());
    out.push_back(h);
  }
  return out;
}

ReductionOutput<CfpInstance> reduce_pcp_to_cfp(const PcpInstance& src) {
  ReductionOutput<CfpInstance> out;
  out.trace.alphabet = alphabet_of(src.cards);
  const Symbol marker = fresh(out.trace.alphabet);
  out.instance = {gamma_reverse(src.cards), marker};
  out.trace.fresh = {{"marker", marker}};
  out.trace.card_map = identity_map(src.cards.size());
  return out;
}

StackWitness pcp_to_cfp_witness_fwd(const PcpInstance& src, const ReductionOutput<CfpInstance>& out,
                                    const StackWitness& w) {
  require(check_pcp(src, w), "source stack rejected");
  require(check_cfp(out.instance, w), "translated derivation rejected");
  return w;
}

StackWitness pcp_to_cfp_witness_bwd(const PcpInstance& src, const ReductionOutput<CfpInstance>& out,
                                    const StackWitness& w) {
  require(check_cfp(out.instance, w), "target derivation rejected");
  require(check_pcp(src, w), "decoded stack rejected");
  return w;
}

ReductionOutput<CfiInstance> reduce_pcp_to_cfi(const PcpInstance& src) {
  ReductionOutput<CfiInstance> out;
  out.trace.alphabet = alphabet_of(src.cards);
  const Symbol marker = fresh(out.trace.alphabet);
  out.instance = {gamma_first(src.cards, marker), gamma_second(src.cards, marker), marker};
  out.trace.fresh = {{"marker", marker}};
  out.trace.card_map = identity_map(src.cards.size());
  return out;
}

CfiWitness pcp_to_cfi_witness_fwd(const PcpInstance& src, const ReductionOutput<CfiInstance>& out,
                                  const StackWitness& w) {
  require(check_pcp(src, w), "source stack rejected");
  CfiWitness result{w, w};
  require(check_cfi(out.instance, result), "translated derivations rejected");
  return result;
}

StackWitness pcp_to_cfi_witness_bwd(const PcpInstance& src, const ReductionOutput<CfiInstance>& out,
                                    const CfiWitness& w) {
  require(check_cfi(out.instance, w), "target derivations rejected");
  // Equal projections force equal stacks (injectivity of the flattening on
  // marker-free stacks); index sequences may still differ on duplicate cards.
  if (w.first != w.second)
    require(select_cards(src.cards, w.first) == select_cards(src.cards, w.second),
            "derivations decode to distinct stacks, contradicting injectivity of the flattening");
  require(check_pcp(src, w.first), "decoded stack rejected");
  return w.first;
}

// ---------------------------------------------------------------------------
// TM -> SRH'

ReductionOutput<SrhPrimeInstance> reduce_tm_to_srh_prime(const TmInstance& src) {
  const TmSpec& m = src.machine;
  try {
    validate(m);
  } catch (const TuringError& e) {
    throw ReductionError(std::string("malformed machine: ") + e.what());
  }
  for (Symbol a : src.input)
    require(contains(m.tape_alphabet, a), "input symbol outside the tape alphabet");

  ReductionOutput<SrhPrimeInstance> out;
  out.instance.rules = tm_rules(m);
  out.instance.from = encode_config(m, initial_config(m, src.input));
  for (Symbol q : m.states)
    if (m.is_halting(q)) out.instance.targets.push_back(q);
  out.trace.fresh = {{"left-marker", m.left_marker()}, {"right-marker", m.right_marker()}};
  out.trace.alphabet = concat(m.tape_alphabet, m.states);
  return out;
}

SrDerivation tm_witness_fwd(const TmInstance& src, const ReductionOutput<SrhPrimeInstance>& out,
                            std::size_t steps) {
  const TmSpec& m = src.machine;
  Config c = initial_config(m, src.input);
  SrDerivation d;
  for (std::size_t n = 0;; ++n) {
    StepResult r = tm_step(m, c);
    if (r.status == StepStatus::Halted) break;
    require(r.status == StepStatus::Moved, "machine is stuck after " + std::to_string(n) + " steps");
    require(n < steps, "machine does not halt within " + std::to_string(steps) + " steps");
    const Str from = encode_config(m, c);
    const Str to = encode_config(m, r.next);
    std::optional<RewriteStep> found;
    for (const Successor& s : rewrite_successors(out.instance.rules, from)) {
      if (s.result != to) continue;
      require(!found, "two rewrites simulate step " + std::to_string(n));
      found = RewriteStep{s.rule, s.cut};
    }
    require(found.has_value(), "no rewrite simulates step " + std::to_string(n));
    d.push_back(*found);
    c = std::move(r.next);
  }
  require(check_srh_prime(out.instance, d), "translated derivation rejected");
  return d;
}

std::size_t tm_witness_bwd(const TmInstance& src, const ReductionOutput<SrhPrimeInstance>& out,
                           const SrDerivation& d) {
  require(check_srh_prime(out.instance, d), "target derivation rejected");
  const TmSpec& m = src.machine;
  const Replay r = replay(out.instance.rules, out.instance.from, d);
  std::optional<Config> c = decode_config(m, r.strings.front());
  require(c == initial_config(m, src.input), "start string is not the initial configuration");
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::optional<Config> next = decode_config(m, r.strings[i + 1]);
    require(next.has_value(), "string after step " + std::to_string(i) + " is not a configuration");
    StepResult s = tm_step(m, *c);
    require(s.status == StepStatus::Moved && s.next == *next,
            "rewrite step " + std::to_string(i) + " is not a machine step");
    c = std::move(next);
  }
  require(m.is_halting(c->state), "final configuration is not halting");
  return d.size();
}

// ---------------------------------------------------------------------------
// SRH' -> SRH

ReductionOutput<SrhInstance> reduce_srh_prime_to_srh(const SrhPrimeInstance& src) {
  ReductionOutput<SrhInstance> out;
  out.trace.alphabet = alphabet_of({rule_symbols(src.rules), src.from, src.targets});
  const Symbol hash = fresh(out.trace.alphabet);
  out.instance.rules = src.rules;
  for (Symbol a : src.targets) out.instance.rules.push_back({{a}, {hash}});
  out.instance.from = src.from;
  out.instance.target = hash;
  out.trace.fresh = {{"hash", hash}};
  out.trace.card_map = identity_map(src.rules.size());
  return out;
}

SrDerivation srh_prime_to_srh_witness_fwd(const SrhPrimeInstance& src, const ReductionOutput<SrhInstance>& out,
                                          const SrDerivation& d) {
  require(check_srh_prime(src, d), "source derivation rejected");
  const Str y = replay(src.rules, src.from, d).last();
  auto hit = std::find_if(y.begin(), y.end(), [&](Symbol a) { return contains(src.targets, a); });
  SrDerivation result = d;
  result.push_back({src.rules.size() + index_of(src.targets, *hit), static_cast<std::size_t>(hit - y.begin())});
  require(check_srh(out.instance, result), "translated derivation rejected");
  return result;
}

SrDerivation srh_prime_to_srh_witness_bwd(const SrhPrimeInstance& src, const ReductionOutput<SrhInstance>& out,
                                          const SrDerivation& d) {
  require(check_srh(out.instance, d), "target derivation rejected");
  auto mark = std::find_if(d.begin(), d.end(), [&](const RewriteStep& s) { return s.rule >= src.rules.size(); });
  require(mark != d.end(), "derivation never introduces the fresh target symbol");
  SrDerivation result(d.begin(), mark);
  require(check_srh_prime(src, result), "truncated derivation rejected");
  return result;
}

}  // namespace pcpred
