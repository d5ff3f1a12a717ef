// pcpred: check, solve, reduce and translate certificates for the problems of
// the TM -> SRH' -> SRH -> SR -> MPCP -> PCP -> {CFP, CFI} chain.
//
// Exit codes: 0 success / accept / found, 1 reject, 2 usage or malformed
// input, 3 not found within the search bound.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcpred/chain.hpp"
#include "pcpred/testkit.hpp"
#include "pcpred/text_format.hpp"

namespace {

using namespace pcpred;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;
constexpr int kNotFound = 3;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kUsage, "cannot write " + path};
}

ParsedInstance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

Witness load_witness(const std::string& path, const Instance& inst) {
  try {
    return parse_witness(read_file(path), &inst).witness;
  } catch (const ParseError& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

Problem tag_arg(const std::string& tag) {
  auto p = parse_problem_tag(tag);
  if (!p) throw Failure{kUsage, "unknown problem tag " + tag};
  return *p;
}

// ---------------------------------------------------------------- reduction maps

json map_json(const std::string& source_text, const std::vector<ReductionStep>& steps, const std::string& target_text,
              const InternTable& symbols) {
  json j;
  j["source_problem"] = problem_tag(problem_of(steps.front().source));
  j["target_problem"] = problem_tag(problem_of(steps.back().target));
  j["source"] = source_text;
  j["target"] = target_text;
  json path = json::array();
  json stages = json::array();
  for (const ReductionStep& s : steps) {
    path.push_back(problem_tag(problem_of(s.target)));
    json fresh = json::array();
    for (const auto& [role, code] : s.trace.fresh) fresh.push_back({{"role", role}, {"code", code}});
    json cards = json::array();
    for (const auto& c : s.trace.card_map) cards.push_back(c ? json(*c) : json(nullptr));
    stages.push_back({{"from", problem_tag(problem_of(s.source))},
                      {"to", problem_tag(problem_of(s.target))},
                      {"fresh", fresh},
                      {"card_map", cards}});
  }
  j["path"] = path;
  j["stages"] = stages;
  json table = json::object();
  for (const auto& [name, code] : symbols.by_name()) table[name] = code;
  j["symbols"] = table;
  return j;
}

struct ReducedOutput {
  std::vector<ReductionStep> steps;
  std::string target_text;
  InternTable symbols;
};

ReducedOutput reduce_file(ParsedInstance parsed, Problem to, bool single) {
  ReducedOutput out;
  try {
    if (single) out.steps.push_back(reduce_once(parsed.instance, to));
    else out.steps = chain(parsed.instance, to);
  } catch (const ReductionError& e) {
    throw Failure{kUsage, e.what()};
  } catch (const TuringError& e) {
    throw Failure{kUsage, e.what()};
  }
  if (out.steps.empty()) throw Failure{kUsage, "source and target problem coincide"};
  out.symbols = std::move(parsed.symbols);
  out.target_text = print_instance(out.steps.back().target, out.symbols);
  return out;
}

int run_reduce(const std::string& file, const std::string& to, const std::string& emit_map, bool single) {
  const std::string text = read_file(file);
  ParsedInstance parsed = load_instance(file);
  ReducedOutput r = reduce_file(std::move(parsed), tag_arg(to), single);
  std::cout << r.target_text;
  if (!emit_map.empty()) write_file(emit_map, map_json(text, r.steps, r.target_text, r.symbols).dump(2) + "\n");
  return kOk;
}

int run_translate(const std::string& map_file, const std::string& witness_file, const std::string& direction) {
  if (direction != "fwd" && direction != "bwd") throw Failure{kUsage, "--direction must be fwd or bwd"};
  json j;
  std::string source_text, target_text;
  Problem to{};
  try {
    j = json::parse(read_file(map_file));
    source_text = j.at("source").get<std::string>();
    target_text = j.at("target").get<std::string>();
    to = tag_arg(j.at("target_problem").get<std::string>());
  } catch (const json::exception& e) {
    throw Failure{kUsage, map_file + ": " + e.what()};
  }
  ParsedInstance parsed;
  try {
    parsed = parse_instance(source_text);
  } catch (const ParseError& e) {
    throw Failure{kUsage, map_file + ": source: " + e.what()};
  }
  ReducedOutput r = reduce_file(std::move(parsed), to, false);
  if (r.target_text != target_text)
    throw Failure{kUsage, map_file + ": recorded target does not match the reduction of the recorded source"};

  const bool fwd = direction == "fwd";
  const Instance& from_inst = fwd ? r.steps.front().source : r.steps.back().target;
  const Instance& to_inst = fwd ? r.steps.back().target : r.steps.front().source;
  Witness w = load_witness(witness_file, from_inst);
  if (CheckResult c = check(from_inst, w); !c) throw Failure{kReject, "witness rejected: " + c.reason};
  Witness out;
  try {
    out = fwd ? chain_fwd(r.steps, w) : chain_bwd(r.steps, w);
  } catch (const ReductionError& e) {
    throw Failure{kReject, e.what()};
  }
  if (CheckResult c = check(to_inst, out); !c) throw Failure{kReject, "translated witness rejected: " + c.reason};
  std::cout << print_witness(problem_of(to_inst), out);
  return kOk;
}

// ---------------------------------------------------------------- check / solve / gen

int run_check(const std::string& inst_file, const std::string& witness_file) {
  ParsedInstance p = load_instance(inst_file);
  Witness w = load_witness(witness_file, p.instance);
  CheckResult r = check(p.instance, w);
  if (r) {
    std::cout << "accept\n";
    return kOk;
  }
  std::cout << "reject: " << r.reason << '\n';
  return kReject;
}

int run_solve(const std::string& inst_file, const SearchBound& b, const std::string& emit) {
  ParsedInstance p = load_instance(inst_file);
  SearchOutcome<Witness> r = solve(p.instance, b);
  if (!r.witness) {
    std::cerr << "not found within bound (" << r.explored << " nodes explored)\n";
    return kNotFound;
  }
  const std::string text = print_witness(problem_of(p.instance), *r.witness);
  std::cout << text;
  if (!emit.empty()) write_file(emit, text);
  return kOk;
}

std::string letter_name(Symbol c) {
  if (c < 26) return std::string(1, static_cast<char>('a' + c));
  return "s" + std::to_string(c);
}

int run_gen(const std::string& tag, std::uint64_t seed, std::size_t size) {
  const Problem p = tag_arg(tag);
  testkit::GenConfig c;
  c.seed = seed;
  c.max_cards = std::max<std::size_t>(size, 1);
  c.max_states = std::max<std::size_t>(size, 1);
  Instance inst;
  switch (p) {
    case Problem::Tm: inst = testkit::gen_tm(c); break;
    case Problem::SrhPrime: inst = testkit::gen_srh_prime(c); break;
    case Problem::Srh: inst = testkit::gen_srh(c); break;
    case Problem::Sr: inst = testkit::gen_srs(c); break;
    case Problem::Mpcp: inst = testkit::gen_mpcp(c); break;
    case Problem::Pcp: inst = testkit::gen_pcp(c); break;
    case Problem::Cfp: inst = reduce_pcp_to_cfp(testkit::gen_pcp(c)).instance; break;
    case Problem::Cfi: inst = reduce_pcp_to_cfi(testkit::gen_pcp(c)).instance; break;
  }
  InternTable names;
  if (const auto* t = std::get_if<TmInstance>(&inst)) {
    for (Symbol a : t->machine.tape_alphabet) names.bind(letter_name(a), a);
    for (std::size_t i = 0; i < t->machine.states.size(); ++i) names.bind("q" + std::to_string(i), t->machine.states[i]);
  } else {
    for (Symbol a : symbols_of(inst))
      if (a < 26) names.bind(letter_name(a), a);
  }
  std::cout << print_instance(inst, names);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions between undecidable problems, with checkable certificates"};
  app.require_subcommand(1);

  std::string instance, witness, to, emit_map, emit_witness, map_file, direction = "fwd", gen_tag;
  SearchBound bound;
  std::uint64_t seed = 0;
  std::size_t size = 3;

  auto* check_cmd = app.add_subcommand("check", "Check a witness against an instance");
  check_cmd->add_option("instance", instance)->required();
  check_cmd->add_option("witness", witness)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Bounded search for a witness");
  solve_cmd->add_option("instance", instance)->required();
  solve_cmd->add_option("--max-cards", bound.max_cards, "Longest stack to try");
  solve_cmd->add_option("--max-steps", bound.max_steps, "Longest derivation or run to try");
  solve_cmd->add_option("--max-len", bound.max_len, "Longest intermediate string or overhang");
  solve_cmd->add_option("--emit-witness", emit_witness, "Also write the witness to FILE");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply one reduction");
  reduce_cmd->add_option("instance", instance)->required();
  reduce_cmd->add_option("--to", to)->required();
  reduce_cmd->add_option("--emit-map", emit_map, "Write the reduction map to FILE");

  auto* chain_cmd = app.add_subcommand("chain", "Compose reductions up to a target problem");
  chain_cmd->add_option("instance", instance)->required();
  chain_cmd->add_option("--to", to)->required();
  chain_cmd->add_option("--emit-map", emit_map, "Write the reduction map to FILE");

  auto* translate_cmd = app.add_subcommand("translate", "Translate a witness across a reduction map");
  translate_cmd->add_option("map", map_file)->required();
  translate_cmd->add_option("witness", witness)->required();
  translate_cmd->add_option("--direction", direction)->check(CLI::IsMember({"fwd", "bwd"}));

  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--problem", gen_tag)->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--size", size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return run_check(instance, witness);
    if (*solve_cmd) return run_solve(instance, bound, emit_witness);
    if (*reduce_cmd) return run_reduce(instance, to, emit_map, true);
    if (*chain_cmd) return run_reduce(instance, to, emit_map, false);
    if (*translate_cmd) return run_translate(map_file, witness, direction);
    if (*gen_cmd) return run_gen(gen_tag, seed, size);
  } catch (const Failure& f) {
    std::cerr << "pcpred: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "pcpred: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
