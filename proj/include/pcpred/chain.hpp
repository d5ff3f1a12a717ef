// Type-erased instances and witnesses, and composition of reductions along
// TM -> SRH' -> SRH -> SR -> MPCP -> PCP -> {CFP, CFI}.

#ifndef PCPRED_CHAIN_HPP
#define PCPRED_CHAIN_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "pcpred/problems.hpp"
#include "pcpred/reductions.hpp"
#include "pcpred/solvers.hpp"

namespace pcpred {

enum class Problem { Tm, SrhPrime, Srh, Sr, Mpcp, Pcp, Cfp, Cfi };

std::string_view problem_tag(Problem p);
std::optional<Problem> parse_problem_tag(std::string_view tag);

// Alternatives are in Problem order.
using Instance = std::variant<TmInstance, SrhPrimeInstance, SrhInstance, SrInstance, MpcpInstance, PcpInstance,
                              CfpInstance, CfiInstance>;
using Witness = std::variant<HaltWitness, SrDerivation, StackWitness, CfiWitness>;

Problem problem_of(const Instance& inst);

/// Exact certificate check for any problem. For TM the witness must be the
/// exact halting step count.
CheckResult check(const Instance& inst, const Witness& w);

/// Bounded search for any problem. TM instances run for b.max_steps steps.
SearchOutcome<Witness> solve(const Instance& inst, const SearchBound& b);

struct ReductionStep {
  Instance source;
  Instance target;
  ReductionTrace trace;
};

/// The problem the single reduction out of `from` leads to; PCP has two.
std::vector<Problem> direct_targets(Problem from);

/// One reduction. Throws ReductionError if `to` is not a direct target.
ReductionStep reduce_once(const Instance& src, Problem to);

/// Problems visited after `from` on the way to `to`. Throws ReductionError
/// when `to` is not reachable.
std::vector<Problem> chain_path(Problem from, Problem to);

std::vector<ReductionStep> chain(const Instance& src, Problem to);

Witness translate_fwd(const ReductionStep& step, const Witness& w);
Witness translate_bwd(const ReductionStep& step, const Witness& w);

Witness chain_fwd(const std::vector<ReductionStep>& steps, Witness w);
Witness chain_bwd(const std::vector<ReductionStep>& steps, Witness w);

}  // namespace pcpred

#endif  // PCPRED_CHAIN_HPP
