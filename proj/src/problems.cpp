#include "pcpred/problems.hpp"

#include <algorithm>

namespace pcpred {

std::vector<Card> MpcpInstance::all_cards() const {
  std::vector<Card> out;
  out.reserve(cards.size() + 1);
  out.push_back(first);
  out.insert(out.end(), cards.begin(), cards.end());
  return out;
}

std::optional<Str> apply_step(const std::vector<Card>& rules, const Str& x, RewriteStep step) {
  if (step.rule >= rules.size()) return std::nullopt;
  const Card& r = rules[step.rule];
  if (step.cut > x.size() || x.size() - step.cut < r.top.size()) return std::nullopt;
  auto at = x.begin() + static_cast<std::ptrdiff_t>(step.cut);
  if (!std::equal(r.top.begin(), r.top.end(), at)) return std::nullopt;
  Str out(x.begin(), at);
  out.insert(out.end(), r.bot.begin(), r.bot.end());
  out.insert(out.end(), at + static_cast<std::ptrdiff_t>(r.top.size()), x.end());
  return out;
}

Replay replay(const std::vector<Card>& rules, const Str& from, const SrDerivation& d) {
  Replay out;
  out.strings.push_back(from);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto next = apply_step(rules, out.strings.back(), d[i]);
    if (!next) {
      out.failed_step = i;
      return out;
    }
    out.strings.push_back(std::move(*next));
  }
  return out;
}

std::optional<Stack> select_cards(const std::vector<Card>& cards, const StackWitness& w) {
  Stack out;
  out.reserve(w.size());
  for (std::size_t i : w) {
    if (i >= cards.size()) return std::nullopt;
    out.push_back(cards[i]);
  }
  return out;
}

namespace {

std::string bad_index(const StackWitness& w, std::size_t n) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] >= n)
      return "index " + std::to_string(w[k]) + " at position " + std::to_string(k) + " out of range (" +
             std::to_string(n) + " cards)";
  return "index out of range";
}

std::string bad_step(const Replay& r) {
  return "step " + std::to_string(*r.failed_step) + " is not a legal rewrite";
}

}  // namespace

CheckResult check_pcp(const PcpInstance& inst, const StackWitness& w) {
  if (w.empty()) return CheckResult::reject("empty stack");
  auto stack = select_cards(inst.cards, w);
  if (!stack) return CheckResult::reject(bad_index(w, inst.cards.size()));
  if (trace_top(*stack) != trace_bot(*stack)) return CheckResult::reject("upper and lower traces differ");
  return CheckResult::accept();
}

CheckResult check_mpcp(const MpcpInstance& inst, const StackWitness& w) {
  auto all = inst.all_cards();
  auto stack = select_cards(all, w);
  if (!stack) return CheckResult::reject(bad_index(w, all.size()));
  if (concat(inst.first.top, trace_top(*stack)) != concat(inst.first.bot, trace_bot(*stack)))
    return CheckResult::reject("upper and lower traces differ");
  return CheckResult::accept();
}

CheckResult check_sr(const SrInstance& inst, const SrDerivation& d) {
  Replay r = replay(inst.rules, inst.from, d);
  if (!r.ok()) return CheckResult::reject(bad_step(r));
  if (r.last() != inst.to) return CheckResult::reject("derivation does not end at the target string");
  return CheckResult::accept();
}

CheckResult check_srh(const SrhInstance& inst, const SrDerivation& d) {
  Replay r = replay(inst.rules, inst.from, d);
  if (!r.ok()) return CheckResult::reject(bad_step(r));
  if (!contains(r.last(), inst.target)) return CheckResult::reject("final string lacks the target symbol");
  return CheckResult::accept();
}

CheckResult check_srh_prime(const SrhPrimeInstance& inst, const SrDerivation& d) {
  Replay r = replay(inst.rules, inst.from, d);
  if (!r.ok()) return CheckResult::reject(bad_step(r));
  for (Symbol a : inst.targets)
    if (contains(r.last(), a)) return CheckResult::accept();
  return CheckResult::reject("final string shares no symbol with the targets");
}

CheckResult check_cfp(const CfpInstance& inst, const StackWitness& w) {
  if (w.empty()) return CheckResult::reject("empty derivation");
  auto stack = select_cards(inst.rules, w);
  if (!stack) return CheckResult::reject(bad_index(w, inst.rules.size()));
  if (!is_palindrome(sigma(inst.marker, *stack))) return CheckResult::reject("projection is not a palindrome");
  return CheckResult::accept();
}

CheckResult check_cfi(const CfiInstance& inst, const CfiWitness& w) {
  if (w.first.empty() || w.second.empty()) return CheckResult::reject("empty derivation");
  auto s1 = select_cards(inst.rules1, w.first);
  if (!s1) return CheckResult::reject("grammar 1: " + bad_index(w.first, inst.rules1.size()));
  auto s2 = select_cards(inst.rules2, w.second);
  if (!s2) return CheckResult::reject("grammar 2: " + bad_index(w.second, inst.rules2.size()));
  if (sigma(inst.marker, *s1) != sigma(inst.marker, *s2)) return CheckResult::reject("projections differ");
  return CheckResult::accept();
}

}  // namespace pcpred
