// Seeded generators and brute-force reference oracles for property tests.
//
// The PRNG is SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15,
// then the usual xor-shift-multiply finalizer. Identical GenConfig values give
// identical instances on every platform.

#ifndef PCPRED_TESTKIT_HPP
#define PCPRED_TESTKIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcpred/core.hpp"
#include "pcpred/problems.hpp"
#include "pcpred/reductions.hpp"

namespace pcpred::testkit {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  /// Inclusive range.
  std::size_t between(std::size_t lo, std::size_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// Independent generator derived from this one.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t alphabet_size = 2;
  std::size_t max_cards = 3;
  std::size_t max_side_len = 2;
  std::size_t max_states = 3;
};

/// Symbols are 0 .. alphabet_size - 1.
Str random_string(SplitMix64& rng, std::size_t alphabet_size, std::size_t min_len, std::size_t max_len);
Card random_card(SplitMix64& rng, std::size_t alphabet_size, std::size_t max_side_len);
Stack random_stack(SplitMix64& rng, std::size_t alphabet_size, std::size_t max_cards, std::size_t max_side_len);

PcpInstance gen_pcp(const GenConfig& c);

struct PlantedPcp {
  PcpInstance instance;
  StackWitness plant;  // accepted by check_pcp
};
/// Builds a random match first, then shuffles its distinct cards into the
/// instance. max_cards bounds the plant length.
PlantedPcp gen_pcp_planted(const GenConfig& c);

/// With probability 1/2 the target is reached by a short random walk.
SrInstance gen_srs(const GenConfig& c);
SrhInstance gen_srh(const GenConfig& c);
SrhPrimeInstance gen_srh_prime(const GenConfig& c);
/// With probability 1/2 the first card and cards come from a planted match.
MpcpInstance gen_mpcp(const GenConfig& c);
/// Tape symbols 0 .. s-1, states s .. s+q-1, start = first state, total delta
/// on non-halting states, nonempty halting set with probability 1/2.
TmInstance gen_tm(const GenConfig& c);

/// Every witness of length 1..k accepted by check_pcp, in length-then-lex order.
std::vector<StackWitness> oracle_pcp(const PcpInstance& inst, std::size_t k);

/// Minimal number of steps from `from` to `to` by plain depth-bounded
/// enumeration (no visited set), skipping strings longer than max_len.
std::optional<std::size_t> oracle_sr_distance(const SrInstance& inst, std::size_t max_steps, std::size_t max_len);

}  // namespace pcpred::testkit

#endif  // PCPRED_TESTKIT_HPP
