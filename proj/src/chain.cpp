#include "pcpred/chain.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace pcpred {

namespace {

constexpr std::array<std::string_view, 8> kTags = {"tm", "srh'", "srh", "sr", "mpcp", "pcp", "cfp", "cfi"};

template <class W>
const W& witness_as(const Witness& w, std::string_view problem) {
  if (const W* p = std::get_if<W>(&w)) return *p;
  throw ReductionError("witness kind does not fit problem " + std::string(problem));
}

template <class T>
ReductionOutput<T> output_of(const ReductionStep& s) {
  return {std::get<T>(s.target), s.trace};
}

template <class W, class O>
SearchOutcome<Witness> erase(SearchOutcome<O> r) {
  SearchOutcome<Witness> out;
  out.explored = r.explored;
  if (r.witness) out.witness = Witness{W(std::move(*r.witness))};
  return out;
}

}  // namespace

std::string_view problem_tag(Problem p) { return kTags[static_cast<std::size_t>(p)]; }

std::optional<Problem> parse_problem_tag(std::string_view tag) {
  for (std::size_t i = 0; i < kTags.size(); ++i)
    if (kTags[i] == tag) return static_cast<Problem>(i);
  return std::nullopt;
}

Problem problem_of(const Instance& inst) { return static_cast<Problem>(inst.index()); }

CheckResult check(const Instance& inst, const Witness& w) {
  const std::string_view tag = problem_tag(problem_of(inst));
  auto wrong_kind = [&] { return CheckResult::reject("witness kind does not fit problem " + std::string(tag)); };
  return std::visit(
      [&](const auto& i) -> CheckResult {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, TmInstance>) {
          const auto* h = std::get_if<HaltWitness>(&w);
          if (!h) return wrong_kind();
          RunResult r = tm_run(i.machine, i.input, h->steps);
          if (!r.halted) return CheckResult::reject("machine does not halt within " + std::to_string(h->steps) + " steps");
          if (r.steps != h->steps) return CheckResult::reject("machine halts after " + std::to_string(r.steps) + " steps");
          return CheckResult::accept();
        } else if constexpr (std::is_same_v<T, SrhPrimeInstance> || std::is_same_v<T, SrhInstance> ||
                             std::is_same_v<T, SrInstance>) {
          const auto* d = std::get_if<SrDerivation>(&w);
          if (!d) return wrong_kind();
          if constexpr (std::is_same_v<T, SrhPrimeInstance>) return check_srh_prime(i, *d);
          else if constexpr (std::is_same_v<T, SrhInstance>) return check_srh(i, *d);
          else return check_sr(i, *d);
        } else if constexpr (std::is_same_v<T, CfiInstance>) {
          const auto* p = std::get_if<CfiWitness>(&w);
          if (!p) return wrong_kind();
          return check_cfi(i, *p);
        } else {
          const auto* s = std::get_if<StackWitness>(&w);
          if (!s) return wrong_kind();
          if constexpr (std::is_same_v<T, MpcpInstance>) return check_mpcp(i, *s);
          else if constexpr (std::is_same_v<T, PcpInstance>) return check_pcp(i, *s);
          else return check_cfp(i, *s);
        }
      },
      inst);
}

SearchOutcome<Witness> solve(const Instance& inst, const SearchBound& b) {
  return std::visit(
      [&](const auto& i) -> SearchOutcome<Witness> {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, TmInstance>) {
          RunResult r = tm_run(i.machine, i.input, b.max_steps);
          SearchOutcome<Witness> out;
          out.explored = r.steps + 1;
          if (r.halted) out.witness = Witness{HaltWitness{r.steps}};
          return out;
        } else if constexpr (std::is_same_v<T, SrhPrimeInstance>) {
          return erase<SrDerivation>(solve_srh_prime(i, b));
        } else if constexpr (std::is_same_v<T, SrhInstance>) {
          return erase<SrDerivation>(solve_srh(i, b));
        } else if constexpr (std::is_same_v<T, SrInstance>) {
          return erase<SrDerivation>(solve_sr(i, b));
        } else if constexpr (std::is_same_v<T, MpcpInstance>) {
          return erase<StackWitness>(solve_mpcp(i, b));
        } else if constexpr (std::is_same_v<T, PcpInstance>) {
          return erase<StackWitness>(solve_pcp(i, b));
        } else if constexpr (std::is_same_v<T, CfpInstance>) {
          return erase<StackWitness>(solve_cfp(i, b));
        } else {
          return erase<CfiWitness>(solve_cfi(i, b));
        }
      },
      inst);
}

std::vector<Problem> direct_targets(Problem from) {
  switch (from) {
    case Problem::Tm: return {Problem::SrhPrime};
    case Problem::SrhPrime: return {Problem::Srh};
    case Problem::Srh: return {Problem::Sr};
    case Problem::Sr: return {Problem::Mpcp};
    case Problem::Mpcp: return {Problem::Pcp};
    case Problem::Pcp: return {Problem::Cfp, Problem::Cfi};
    case Problem::Cfp:
    case Problem::Cfi: return {};
  }
  return {};
}

ReductionStep reduce_once(const Instance& src, Problem to) {
  const Problem from = problem_of(src);
  auto targets = direct_targets(from);
  if (std::find(targets.begin(), targets.end(), to) == targets.end())
    throw ReductionError("no direct reduction from " + std::string(problem_tag(from)) + " to " +
                         std::string(problem_tag(to)));
  auto wrap = [&src](auto out) { return ReductionStep{src, Instance{std::move(out.instance)}, std::move(out.trace)}; };
  switch (from) {
    case Problem::Tm: return wrap(reduce_tm_to_srh_prime(std::get<TmInstance>(src)));
    case Problem::SrhPrime: return wrap(reduce_srh_prime_to_srh(std::get<SrhPrimeInstance>(src)));
    case Problem::Srh: return wrap(reduce_srh_to_sr(std::get<SrhInstance>(src)));
    case Problem::Sr: return wrap(reduce_sr_to_mpcp(std::get<SrInstance>(src)));
    case Problem::Mpcp: return wrap(reduce_mpcp_to_pcp(std::get<MpcpInstance>(src)));
    case Problem::Pcp:
      if (to == Problem::Cfp) return wrap(reduce_pcp_to_cfp(std::get<PcpInstance>(src)));
      return wrap(reduce_pcp_to_cfi(std::get<PcpInstance>(src)));
    default: break;
  }
  throw ReductionError("unreachable");
}

std::vector<Problem> chain_path(Problem from, Problem to) {
  std::vector<Problem> path;
  Problem at = from;
  while (at != to) {
    auto next = direct_targets(at);
    if (next.empty()) {
      throw ReductionError(std::string(problem_tag(to)) + " is not reachable from " +
                           std::string(problem_tag(from)));
    }
    // Only PCP branches; pick the branch that is the target, else the first.
    at = std::find(next.begin(), next.end(), to) != next.end() ? to : next.front();
    path.push_back(at);
  }
  return path;
}

std::vector<ReductionStep> chain(const Instance& src, Problem to) {
  std::vector<ReductionStep> steps;
  Instance current = src;
  for (Problem p : chain_path(problem_of(src), to)) {
    steps.push_back(reduce_once(current, p));
    current = steps.back().target;
  }
  return steps;
}

Witness translate_fwd(const ReductionStep& step, const Witness& w) {
  const Problem from = problem_of(step.source);
  const std::string_view tag = problem_tag(from);
  switch (from) {
    case Problem::Tm: {
      const auto& src = std::get<TmInstance>(step.source);
      return tm_witness_fwd(src, output_of<SrhPrimeInstance>(step), witness_as<HaltWitness>(w, tag).steps);
    }
    case Problem::SrhPrime:
      return srh_prime_to_srh_witness_fwd(std::get<SrhPrimeInstance>(step.source), output_of<SrhInstance>(step),
                                          witness_as<SrDerivation>(w, tag));
    case Problem::Srh:
      return srh_to_sr_witness_fwd(std::get<SrhInstance>(step.source), output_of<SrInstance>(step),
                                   witness_as<SrDerivation>(w, tag));
    case Problem::Sr:
      return sr_to_mpcp_witness_fwd(std::get<SrInstance>(step.source), output_of<MpcpInstance>(step),
                                    witness_as<SrDerivation>(w, tag));
    case Problem::Mpcp:
      return mpcp_to_pcp_witness_fwd(std::get<MpcpInstance>(step.source), output_of<PcpInstance>(step),
                                     witness_as<StackWitness>(w, tag));
    case Problem::Pcp: {
      const auto& src = std::get<PcpInstance>(step.source);
      const auto& sw = witness_as<StackWitness>(w, tag);
      if (std::holds_alternative<CfpInstance>(step.target))
        return pcp_to_cfp_witness_fwd(src, output_of<CfpInstance>(step), sw);
      return pcp_to_cfi_witness_fwd(src, output_of<CfiInstance>(step), sw);
    }
    default: break;
  }
  throw ReductionError("no reduction starts at " + std::string(tag));
}

Witness translate_bwd(const ReductionStep& step, const Witness& w) {
  const Problem from = problem_of(step.source);
  const std::string_view tag = problem_tag(problem_of(step.target));
  switch (from) {
    case Problem::Tm:
      return HaltWitness{tm_witness_bwd(std::get<TmInstance>(step.source), output_of<SrhPrimeInstance>(step),
                                        witness_as<SrDerivation>(w, tag))};
    case Problem::SrhPrime:
      return srh_prime_to_srh_witness_bwd(std::get<SrhPrimeInstance>(step.source), output_of<SrhInstance>(step),
                                          witness_as<SrDerivation>(w, tag));
    case Problem::Srh:
      return srh_to_sr_witness_bwd(std::get<SrhInstance>(step.source), output_of<SrInstance>(step),
                                   witness_as<SrDerivation>(w, tag));
    case Problem::Sr:
      return sr_to_mpcp_witness_bwd(std::get<SrInstance>(step.source), output_of<MpcpInstance>(step),
                                    witness_as<StackWitness>(w, tag));
    case Problem::Mpcp:
      return mpcp_to_pcp_witness_bwd(std::get<MpcpInstance>(step.source), output_of<PcpInstance>(step),
                                     witness_as<StackWitness>(w, tag));
    case Problem::Pcp: {
      const auto& src = std::get<PcpInstance>(step.source);
      if (std::holds_alternative<CfpInstance>(step.target))
        return pcp_to_cfp_witness_bwd(src, output_of<CfpInstance>(step), witness_as<StackWitness>(w, tag));
      return pcp_to_cfi_witness_bwd(src, output_of<CfiInstance>(step), witness_as<CfiWitness>(w, tag));
    }
    default: break;
  }
  throw ReductionError("no reduction starts at " + std::string(problem_tag(from)));
}

Witness chain_fwd(const std::vector<ReductionStep>& steps, Witness w) {
  for (const ReductionStep& s : steps) w = translate_fwd(s, w);
  return w;
}

Witness chain_bwd(const std::vector<ReductionStep>& steps, Witness w) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) w = translate_bwd(*it, w);
  return w;
}

}  // namespace pcpred
