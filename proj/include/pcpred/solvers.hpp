// Bounded brute-force search for every problem.
//
// A solver either returns a witness that its checker accepts or reports that
// nothing was found within the bound. It never claims unsatisfiability.

#ifndef PCPRED_SOLVERS_HPP
#define PCPRED_SOLVERS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pcpred/core.hpp"
#include "pcpred/problems.hpp"

namespace pcpred {

struct SearchBound {
  std::size_t max_steps = 16;  // rewriting steps
  std::size_t max_len = 16;    // string length / PCP overhang length
  std::size_t max_cards = 8;   // stack or grammar derivation length
};

template <class W>
struct SearchOutcome {
  std::optional<W> witness;  // set iff found
  std::size_t explored = 0;  // search nodes visited

  bool found() const { return witness.has_value(); }
};

struct Successor {
  Str result;
  std::size_t rule = 0;
  std::size_t cut = 0;
  friend bool operator==(const Successor&, const Successor&) = default;
};

/// All one-step rewrites of x, by increasing cut and then increasing rule index.
std::vector<Successor> rewrite_successors(const std::vector<Card>& rules, const Str& x);

SearchOutcome<SrDerivation> solve_sr(const SrInstance& inst, const SearchBound& b);
SearchOutcome<SrDerivation> solve_srh(const SrhInstance& inst, const SearchBound& b);
SearchOutcome<SrDerivation> solve_srh_prime(const SrhPrimeInstance& inst, const SearchBound& b);

/// Iterative deepening over the trace overhang. Returns the lexicographically
/// largest witness among those of minimal length.
SearchOutcome<StackWitness> solve_pcp(const PcpInstance& inst, const SearchBound& b);
/// As solve_pcp, starting from the overhang of the forced first card. The
/// witness excludes the forced card and may be empty.
SearchOutcome<StackWitness> solve_mpcp(const MpcpInstance& inst, const SearchBound& b);

/// Length-then-lex enumeration of derivations.
SearchOutcome<StackWitness> solve_cfp(const CfpInstance& inst, const SearchBound& b);
/// Goes through solve_pcp when the grammars have the paired x/x#y# , y/x#y#
/// shape; otherwise enumerates both grammars jointly.
SearchOutcome<CfiWitness> solve_cfi(const CfiInstance& inst, const SearchBound& b);

/// The PCP instance [x_i / y_i] when rules1[i] = x_i / x_i#y_i# and
/// rules2[i] = y_i / x_i#y_i# with # the marker, absent from all x_i, y_i.
std::optional<PcpInstance> paired_pcp(const CfiInstance& inst);

}  // namespace pcpred

#endif  // PCPRED_SOLVERS_HPP
