// Reduction functions along TM -> SRH' -> SRH -> SR -> MPCP -> PCP -> {CFP, CFI},
// each with a forward witness translator (source certificate to target
// certificate) and a backward one (target certificate to source certificate).
//
// Translators are checked: they verify their precondition with the exact
// checker, re-verify every structural assumption while decoding, verify their
// own output, and throw ReductionError instead of returning an unchecked
// witness.

#ifndef PCPRED_REDUCTIONS_HPP
#define PCPRED_REDUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcpred/core.hpp"
#include "pcpred/problems.hpp"
#include "pcpred/turing.hpp"

namespace pcpred {

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TmInstance {
  TmSpec machine;
  Str input;
  friend bool operator==(const TmInstance&, const TmInstance&) = default;
};

/// Certificate for the halting problem: the machine halts after exactly this
/// many steps.
struct HaltWitness {
  std::size_t steps = 0;
  friend bool operator==(const HaltWitness&, const HaltWitness&) = default;
};

/// What a reduction fixed while building its output.
struct ReductionTrace {
  /// Fresh symbols by role ("hash", "dollar", "marker", ...), in allocation order.
  std::vector<std::pair<std::string, Symbol>> fresh;
  /// The source alphabet the reduction was built over.
  Alphabet alphabet;
  /// Source card/rule index to target card/rule index; nullopt if dropped.
  std::vector<std::optional<std::size_t>> card_map;

  Symbol fresh_symbol(std::string_view role) const;
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

template <class I>
struct ReductionOutput {
  I instance;
  ReductionTrace trace;
};

// SRH -> SR: absorb every neighbour of the target symbol.
ReductionOutput<SrInstance> reduce_srh_to_sr(const SrhInstance& src);
SrDerivation srh_to_sr_witness_fwd(const SrhInstance& src, const ReductionOutput<SrInstance>& out,
                                   const SrDerivation& d);
SrDerivation srh_to_sr_witness_bwd(const SrhInstance& src, const ReductionOutput<SrInstance>& out,
                                   const SrDerivation& d);

// SR -> MPCP. Target card layout (as witness indices): 0 = d = $ / $x#,
// 1 = e = y#$ / $, then the rules, then #/#, then one copy card a/a per
// alphabet symbol.
ReductionOutput<MpcpInstance> reduce_sr_to_mpcp(const SrInstance& src);
StackWitness sr_to_mpcp_witness_fwd(const SrInstance& src, const ReductionOutput<MpcpInstance>& out,
                                    const SrDerivation& d);
SrDerivation sr_to_mpcp_witness_bwd(const SrInstance& src, const ReductionOutput<MpcpInstance>& out,
                                    const StackWitness& w);

// MPCP -> PCP. Target layout: 0 = d, 1 = e, then the hashed images of
// first :: cards in order, skipping eps/eps cards.
ReductionOutput<PcpInstance> reduce_mpcp_to_pcp(const MpcpInstance& src);
StackWitness mpcp_to_pcp_witness_fwd(const MpcpInstance& src, const ReductionOutput<PcpInstance>& out,
                                     const StackWitness& w);
StackWitness mpcp_to_pcp_witness_bwd(const MpcpInstance& src, const ReductionOutput<PcpInstance>& out,
                                     const StackWitness& w);

// PCP -> CFP. Card i becomes rule i, so witnesses carry over unchanged.
ReductionOutput<CfpInstance> reduce_pcp_to_cfp(const PcpInstance& src);
StackWitness pcp_to_cfp_witness_fwd(const PcpInstance& src, const ReductionOutput<CfpInstance>& out,
                                    const StackWitness& w);
StackWitness pcp_to_cfp_witness_bwd(const PcpInstance& src, const ReductionOutput<CfpInstance>& out,
                                    const StackWitness& w);

// PCP -> CFI.
ReductionOutput<CfiInstance> reduce_pcp_to_cfi(const PcpInstance& src);
CfiWitness pcp_to_cfi_witness_fwd(const PcpInstance& src, const ReductionOutput<CfiInstance>& out,
                                  const StackWitness& w);
StackWitness pcp_to_cfi_witness_bwd(const PcpInstance& src, const ReductionOutput<CfiInstance>& out,
                                    const CfiWitness& w);

// TM -> SRH'.
ReductionOutput<SrhPrimeInstance> reduce_tm_to_srh_prime(const TmInstance& src);
SrDerivation tm_witness_fwd(const TmInstance& src, const ReductionOutput<SrhPrimeInstance>& out,
                            std::size_t steps);
std::size_t tm_witness_bwd(const TmInstance& src, const ReductionOutput<SrhPrimeInstance>& out,
                           const SrDerivation& d);

// SRH' -> SRH: every target symbol rewrites to a fresh symbol.
ReductionOutput<SrhInstance> reduce_srh_prime_to_srh(const SrhPrimeInstance& src);
SrDerivation srh_prime_to_srh_witness_fwd(const SrhPrimeInstance& src, const ReductionOutput<SrhInstance>& out,
                                          const SrDerivation& d);
SrDerivation srh_prime_to_srh_witness_bwd(const SrhPrimeInstance& src, const ReductionOutput<SrhInstance>& out,
                                          const SrDerivation& d);

/// [x / reverse(y)]
std::vector<Card> gamma_reverse(std::span<const Card> stack);
/// [x / x h y h]
std::vector<Card> gamma_first(std::span<const Card> stack, Symbol h);
/// [y / x h y h]
std::vector<Card> gamma_second(std::span<const Card> stack, Symbol h);
/// flatten([]) = eps, flatten(x/y :: A) = flatten(A) x h y h
Str gamma_flatten(std::span<const Card> stack, Symbol h);

}  // namespace pcpred

#endif  // PCPRED_REDUCTIONS_HPP
