#include "pcpred/solvers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace pcpred {

std::vector<Successor> rewrite_successors(const std::vector<Card>& rules, const Str& x) {
  std::vector<Successor> out;
  for (std::size_t cut = 0; cut <= x.size(); ++cut)
    for (std::size_t r = 0; r < rules.size(); ++r)
      if (auto y = apply_step(rules, x, {r, cut})) out.push_back({std::move(*y), r, cut});
  return out;
}

namespace {

// Breadth-first search over rewrite successors with an exact-string visited set.
SearchOutcome<SrDerivation> bfs(const std::vector<Card>& rules, const Str& from, const SearchBound& b,
                                const std::function<bool(const Str&)>& goal) {
  struct Node {
    Str s;
    std::size_t parent;
    RewriteStep step;
    std::size_t depth;
  };
  SearchOutcome<SrDerivation> out;
  std::vector<Node> nodes;
  std::unordered_set<Str, StrHash> seen;

  auto path_to = [&nodes](std::size_t id) {
    SrDerivation d;
    for (; id != 0; id = nodes[id].parent) d.push_back(nodes[id].step);
    std::reverse(d.begin(), d.end());
    return d;
  };

  nodes.push_back({from, 0, {}, 0});
  seen.insert(from);
  out.explored = 1;
  if (goal(from)) {
    out.witness = SrDerivation{};
    return out;
  }
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop_front();
    if (nodes[id].depth >= b.max_steps) continue;
    for (Successor& s : rewrite_successors(rules, nodes[id].s)) {
      if (s.result.size() > b.max_len || seen.contains(s.result)) continue;
      seen.insert(s.result);
      ++out.explored;
      nodes.push_back({std::move(s.result), id, {s.rule, s.cut}, nodes[id].depth + 1});
      std::size_t child = nodes.size() - 1;
      if (goal(nodes[child].s)) {
        out.witness = path_to(child);
        return out;
      }
      queue.push_back(child);
    }
  }
  return out;
}

// Which trace is ahead, and by what. An empty `rest` is the balanced state.
struct Overhang {
  bool top_ahead = true;
  Str rest;

  friend bool operator==(const Overhang&, const Overhang&) = default;
  friend auto operator<=>(const Overhang&, const Overhang&) = default;
};

std::optional<Overhang> extend(const Overhang& o, const Card& c) {
  Str upper = o.top_ahead ? concat(o.rest, c.top) : c.top;
  Str lower = o.top_ahead ? c.bot : concat(o.rest, c.bot);
  if (is_prefix(lower, upper)) return Overhang{true, Str(upper.begin() + static_cast<std::ptrdiff_t>(lower.size()), upper.end())};
  if (is_prefix(upper, lower)) return Overhang{false, Str(lower.begin() + static_cast<std::ptrdiff_t>(upper.size()), lower.end())};
  return std::nullopt;
}

// Iterative deepening from `root`. Cards are tried from the highest index
// down, so the first hit is the lexicographically largest witness of minimal
// length.
SearchOutcome<StackWitness> deepen(const std::vector<Card>& cards, const Overhang& root, const SearchBound& b) {
  SearchOutcome<StackWitness> out;
  // (overhang, remaining cards) pairs proven to have no exact completion.
  std::set<std::pair<Overhang, std::size_t>> dead;
  StackWitness path;

  std::function<bool(const Overhang&, std::size_t)> dfs = [&](const Overhang& o, std::size_t remaining) {
    ++out.explored;
    if (remaining == 0) return o.rest.empty();
    if (dead.contains({o, remaining})) return false;
    for (std::size_t i = cards.size(); i-- > 0;) {
      auto next = extend(o, cards[i]);
      if (!next || next->rest.size() > b.max_len) continue;
      path.push_back(i);
      if (dfs(*next, remaining - 1)) return true;
      path.pop_back();
    }
    dead.insert({o, remaining});
    return false;
  };

  for (std::size_t k = 1; k <= b.max_cards; ++k) {
    path.clear();
    if (dfs(root, k)) {
      out.witness = path;
      return out;
    }
  }
  return out;
}

void enumerate_sequences(std::size_t n, std::size_t max_len,
                         const std::function<bool(const StackWitness&)>& visit) {
  if (n == 0) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    StackWitness w(len, 0);
    while (true) {
      if (visit(w)) return;
      std::size_t pos = len;
      while (pos > 0 && w[pos - 1] + 1 == n) w[--pos] = 0;
      if (pos == 0) break;
      ++w[pos - 1];
    }
  }
}

}  // namespace

SearchOutcome<SrDerivation> solve_sr(const SrInstance& inst, const SearchBound& b) {
  return bfs(inst.rules, inst.from, b, [&](const Str& s) { return s == inst.to; });
}

SearchOutcome<SrDerivation> solve_srh(const SrhInstance& inst, const SearchBound& b) {
  return bfs(inst.rules, inst.from, b, [&](const Str& s) { return contains(s, inst.target); });
}

SearchOutcome<SrDerivation> solve_srh_prime(const SrhPrimeInstance& inst, const SearchBound& b) {
  return bfs(inst.rules, inst.from, b, [&](const Str& s) {
    return std::any_of(inst.targets.begin(), inst.targets.end(), [&](Symbol a) { return contains(s, a); });
  });
}

SearchOutcome<StackWitness> solve_pcp(const PcpInstance& inst, const SearchBound& b) {
  return deepen(inst.cards, Overhang{}, b);
}

SearchOutcome<StackWitness> solve_mpcp(const MpcpInstance& inst, const SearchBound& b) {
  SearchOutcome<StackWitness> out;
  auto root = extend(Overhang{}, inst.first);
  if (!root || root->rest.size() > b.max_len) return out;
  if (root->rest.empty()) {
    out.explored = 1;
    out.witness = StackWitness{};
    return out;
  }
  return deepen(inst.all_cards(), *root, b);
}

SearchOutcome<StackWitness> solve_cfp(const CfpInstance& inst, const SearchBound& b) {
  SearchOutcome<StackWitness> out;
  enumerate_sequences(inst.rules.size(), b.max_cards, [&](const StackWitness& w) {
    ++out.explored;
    if (is_palindrome(sigma(inst.marker, *select_cards(inst.rules, w)))) {
      out.witness = w;
      return true;
    }
    return false;
  });
  return out;
}

std::optional<PcpInstance> paired_pcp(const CfiInstance& inst) {
  if (inst.rules1.size() != inst.rules2.size()) return std::nullopt;
  PcpInstance p;
  for (std::size_t i = 0; i < inst.rules1.size(); ++i) {
    const Card& r1 = inst.rules1[i];
    const Card& r2 = inst.rules2[i];
    if (contains(r1.top, inst.marker) || contains(r2.top, inst.marker)) return std::nullopt;
    Str expected = concat({r1.top, {inst.marker}, r2.top, {inst.marker}});
    if (r1.bot != expected || r2.bot != expected) return std::nullopt;
    p.cards.push_back({r1.top, r2.top});
  }
  return p;
}

SearchOutcome<CfiWitness> solve_cfi(const CfiInstance& inst, const SearchBound& b) {
  SearchOutcome<CfiWitness> out;
  if (auto p = paired_pcp(inst)) {
    auto r = solve_pcp(*p, b);
    out.explored = r.explored;
    if (r.witness) out.witness = CfiWitness{*r.witness, *r.witness};
    return out;
  }
  std::unordered_map<Str, StackWitness, StrHash> first_by_projection;
  enumerate_sequences(inst.rules1.size(), b.max_cards, [&](const StackWitness& w) {
    ++out.explored;
    first_by_projection.try_emplace(sigma(inst.marker, *select_cards(inst.rules1, w)), w);
    return false;
  });
  enumerate_sequences(inst.rules2.size(), b.max_cards, [&](const StackWitness& w) {
    ++out.explored;
    auto it = first_by_projection.find(sigma(inst.marker, *select_cards(inst.rules2, w)));
    if (it == first_by_projection.end()) return false;
    out.witness = CfiWitness{it->second, w};
    return true;
  });
  return out;
}

}  // namespace pcpred
