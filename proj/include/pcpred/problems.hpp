// Problem instances and exact certificate checkers.
//
// Checkers never decide a problem. They replay a witness against an instance
// and report whether it is a valid certificate, with the first failure
// position in `reason` when it is not.

#ifndef PCPRED_PROBLEMS_HPP
#define PCPRED_PROBLEMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcpred/core.hpp"

namespace pcpred {

/// x ->*_R y
struct SrInstance {
  std::vector<Card> rules;
  Str from;
  Str to;
  friend bool operator==(const SrInstance&, const SrInstance&) = default;
};

/// exists y. x ->*_R y and target in y
struct SrhInstance {
  std::vector<Card> rules;
  Str from;
  Symbol target = 0;
  friend bool operator==(const SrhInstance&, const SrhInstance&) = default;
};

/// exists y. x ->*_R y and some symbol of `targets` occurs in y
struct SrhPrimeInstance {
  std::vector<Card> rules;
  Str from;
  Str targets;
  friend bool operator==(const SrhPrimeInstance&, const SrhPrimeInstance&) = default;
};

struct PcpInstance {
  std::vector<Card> cards;
  friend bool operator==(const PcpInstance&, const PcpInstance&) = default;
};

/// `first` is not required to occur in `cards`. Witness index 0 denotes
/// `first`, index i + 1 denotes cards[i].
struct MpcpInstance {
  Card first;
  std::vector<Card> cards;

  std::vector<Card> all_cards() const;
  friend bool operator==(const MpcpInstance&, const MpcpInstance&) = default;
};

/// Post grammar (rules, marker): does it generate a palindrome?
struct CfpInstance {
  std::vector<Card> rules;
  Symbol marker = 0;
  friend bool operator==(const CfpInstance&, const CfpInstance&) = default;
};

/// Two Post grammars sharing a marker: do they generate a common string?
struct CfiInstance {
  std::vector<Card> rules1;
  std::vector<Card> rules2;
  Symbol marker = 0;
  friend bool operator==(const CfiInstance&, const CfiInstance&) = default;
};

/// Indices into the instance's card list, order and duplicates significant.
using StackWitness = std::vector<std::size_t>;

struct CfiWitness {
  StackWitness first;
  StackWitness second;
  friend bool operator==(const CfiWitness&, const CfiWitness&) = default;
};

/// One rewrite u x v -> u y v with rules[rule] = x/y and cut = |u|.
struct RewriteStep {
  std::size_t rule = 0;
  std::size_t cut = 0;
  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
  friend auto operator<=>(const RewriteStep&, const RewriteStep&) = default;
};

using SrDerivation = std::vector<RewriteStep>;

struct CheckResult {
  bool accepted = false;
  std::string reason;

  static CheckResult accept() { return {true, {}}; }
  static CheckResult reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

/// Applies one step, or nullopt if the rule index or cut is invalid for x.
std::optional<Str> apply_step(const std::vector<Card>& rules, const Str& x, RewriteStep step);

/// Replays a derivation from x. On failure `failed_step` holds the offending
/// index and `strings` the prefix that was replayed.
struct Replay {
  std::vector<Str> strings;  // strings[0] = start, strings[i + 1] after step i
  std::optional<std::size_t> failed_step;
  bool ok() const { return !failed_step.has_value(); }
  const Str& last() const { return strings.back(); }
};
Replay replay(const std::vector<Card>& rules, const Str& from, const SrDerivation& d);

/// Selects cards by index; nullopt if any index is out of range.
std::optional<Stack> select_cards(const std::vector<Card>& cards, const StackWitness& w);

CheckResult check_pcp(const PcpInstance& inst, const StackWitness& w);
CheckResult check_mpcp(const MpcpInstance& inst, const StackWitness& w);
CheckResult check_sr(const SrInstance& inst, const SrDerivation& d);
CheckResult check_srh(const SrhInstance& inst, const SrDerivation& d);
CheckResult check_srh_prime(const SrhPrimeInstance& inst, const SrDerivation& d);
CheckResult check_cfp(const CfpInstance& inst, const StackWitness& w);
CheckResult check_cfi(const CfiInstance& inst, const CfiWitness& w);

}  // namespace pcpred

#endif  // PCPRED_PROBLEMS_HPP
