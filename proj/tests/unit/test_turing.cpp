#include "doctest.h"
#include "pcpred/solvers.hpp"
#include "pcpred/testkit.hpp"
#include "pcpred/turing.hpp"

using namespace pcpred;

namespace {
constexpr Symbol q0 = 0, q1 = 1, a = 2, b = 3, c = 4;

TmSpec machine(std::vector<std::pair<std::pair<Symbol, Cell>, Transition>> delta, Alphabet sigma = {a, b, c},
               Alphabet halting = {q1}) {
  TmSpec m;
  m.tape_alphabet = std::move(sigma);
  m.states = {q0, q1};
  m.start = q0;
  m.halting = std::move(halting);
  for (auto& [k, t] : delta) m.delta[k] = t;
  return m;
}

// the 1-step machine: write b on the empty tape and halt
TmSpec one_step() { return machine({{{q0, std::nullopt}, {q1, b, Move::N}}}, {b}); }

std::vector<Tape> small_tapes(const Alphabet& s) {
  std::vector<Tape> out{EmptyTape{}};
  std::vector<Str> words;
  for (Symbol x : s) {
    words.push_back({x});
    for (Symbol y : s) {
      words.push_back({x, y});
      for (Symbol z : s) words.push_back({x, y, z});
    }
  }
  for (const Str& w : words) {
    out.push_back(LeftOf{w[0], Str(w.begin() + 1, w.end())});
    out.push_back(RightOf{w.back(), Str(w.begin(), w.end() - 1)});
    for (std::size_t i = 0; i < w.size(); ++i)
      out.push_back(MidTape{Str(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), w[i],
                            Str(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end())});
  }
  return out;
}

// Number of configurations (over random machines) where a step and the
// rewrite relation disagree.
std::size_t simulation_mismatches(TableVariant v) {
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    g.alphabet_size = 2;
    g.max_states = 3;
    const TmSpec m = testkit::gen_tm(g).machine;
    const auto rules = tm_rules(m, v);
    for (Symbol q : m.states)
      for (const Tape& t : small_tapes(m.tape_alphabet)) {
        const Config cfg{q, t};
        const StepResult r = tm_step(m, cfg);
        const auto succ = rewrite_successors(rules, encode_config(m, cfg));
        if (r.status == StepStatus::Moved) {
          if (succ.size() != 1 || succ[0].result != encode_config(m, r.next)) ++bad;
        } else if (!succ.empty()) {
          ++bad;
        }
      }
  }
  return bad;
}
}  // namespace

TEST_CASE("tm_step") {
  const TmSpec m1 = one_step();
  StepResult r = tm_step(m1, {q0, EmptyTape{}});
  REQUIRE(r.status == StepStatus::Moved);
  CHECK(r.next == Config{q1, MidTape{{}, b, {}}});
  CHECK(tm_step(m1, {q1, EmptyTape{}}).status == StepStatus::Halted);

  const TmSpec m2 = machine({{{q0, a}, {q1, std::nullopt, Move::R}}});
  r = tm_step(m2, {q0, MidTape{{}, a, {}}});
  REQUIRE(r.status == StepStatus::Moved);
  CHECK(r.next == Config{q1, RightOf{a, {}}});
  CHECK(tm_step(m2, {q0, EmptyTape{}}).status == StepStatus::Stuck);
  CHECK_THROWS_AS(tm_step(m2, {c, EmptyTape{}}), TuringError);
}

TEST_CASE("moves off the written part") {
  const TmSpec left = machine({{{q0, a}, {q1, b, Move::L}}});
  CHECK(tm_step(left, {q0, MidTape{{}, a, {c}}}).next == Config{q1, LeftOf{b, {c}}});
  CHECK(tm_step(left, {q0, MidTape{{c}, a, {}}}).next == Config{q1, MidTape{{}, c, {b}}});
  const TmSpec right = machine({{{q0, std::nullopt}, {q1, a, Move::R}}});
  CHECK(tm_step(right, {q0, RightOf{c, {b}}}).next == Config{q1, RightOf{a, {b, c}}});
  CHECK(tm_step(right, {q0, LeftOf{c, {b}}}).next == Config{q1, MidTape{{a}, c, {b}}});
  const TmSpec stay = machine({{{q0, std::nullopt}, {q1, std::nullopt, Move::L}}});
  CHECK(tm_step(stay, {q0, LeftOf{c, {}}}).next == Config{q1, LeftOf{c, {}}});
  CHECK(tm_step(stay, {q0, RightOf{c, {}}}).next == Config{q1, MidTape{{}, c, {}}});
}

TEST_CASE("tm_run") {
  RunResult r = tm_run(one_step(), {}, 10);
  CHECK(r.halted);
  CHECK(r.steps == 1);

  TmSpec h = one_step();
  h.halting = {q0};
  r = tm_run(h, {}, 10);
  CHECK(r.halted);
  CHECK(r.steps == 0);

  const TmSpec loop = machine({{{q0, std::nullopt}, {q0, std::nullopt, Move::N}}}, {b});
  r = tm_run(loop, {}, 5);
  CHECK_FALSE(r.halted);
  CHECK(r.steps == 5);
}

TEST_CASE("initial configuration") {
  const TmSpec m = one_step();
  CHECK(initial_config(m, {}) == Config{q0, EmptyTape{}});
  CHECK(initial_config(m, {b, b}) == Config{q0, LeftOf{b, {b}}});
}

TEST_CASE("markers are fresh") {
  const TmSpec m = machine({});
  const Symbol L = m.left_marker(), R = m.right_marker();
  CHECK(L == fresh(Str{a, b, c, q0, q1}));
  CHECK(R == fresh(Str{a, b, c, q0, q1, L}));
  CHECK(L != R);
}

TEST_CASE("encode_config shapes") {
  const TmSpec m = machine({});
  const Symbol L = m.left_marker(), R = m.right_marker();
  CHECK(encode_config(m, {q0, EmptyTape{}}) == Str{q0, L, R});
  CHECK(encode_config(m, {q0, MidTape{{a}, b, {c}}}) == Str{L, a, q0, b, c, R});
  CHECK(encode_config(m, {q0, LeftOf{a, {b}}}) == Str{q0, L, a, b, R});
  CHECK(encode_config(m, {q0, RightOf{c, {a, b}}}) == Str{L, a, b, c, q0, R});
}

TEST_CASE("decode_config") {
  const TmSpec m = machine({});
  const Symbol L = m.left_marker(), R = m.right_marker();
  CHECK(decode_config(m, encode_config(m, {q0, EmptyTape{}})) == Config{q0, EmptyTape{}});
  CHECK(decode_config(m, Str{q0, L, a, R}) == Config{q0, LeftOf{a, {}}});
  CHECK_FALSE(decode_config(m, Str{L, R}).has_value());
  CHECK_FALSE(decode_config(m, Str{q0, q1, L, R}).has_value());
  CHECK_FALSE(decode_config(m, Str{L, a, q0, R, R}).has_value());
  CHECK_FALSE(decode_config(m, Str{q0, a, L, R}).has_value());
}

TEST_CASE("decode inverts encode") {
  const TmSpec m = machine({});
  for (Symbol q : m.states)
    for (const Tape& t : small_tapes(m.tape_alphabet)) CHECK(decode_config(m, encode_config(m, {q, t})) == Config{q, t});
}

TEST_CASE("tm_rules rows") {
  {
    const TmSpec m = one_step();
    const Symbol L = m.left_marker(), R = m.right_marker();
    CHECK(tm_rules(m) == std::vector<Card>{{{q0, L}, {L, q1, b}}, {{q0, R}, {q1, b, R}}});
  }
  {
    const TmSpec m = machine({{{q0, a}, {q1, b, Move::N}}});
    CHECK(tm_rules(m) == std::vector<Card>{{{q0, a}, {q1, b}}});
  }
  {
    const TmSpec m = machine({{{q0, a}, {q1, std::nullopt, Move::L}}}, {a});
    const Symbol L = m.left_marker();
    CHECK(tm_rules(m) == std::vector<Card>{{{L, q0, a}, {q1, L, a}}, {{a, q0, a}, {q1, a, a}}});
  }
}

TEST_CASE("halting states emit no rules") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testkit::GenConfig g;
    g.seed = seed;
    const TmSpec m = testkit::gen_tm(g).machine;
    for (const Card& r : tm_rules(m))
      for (Symbol h : m.halting) CHECK_FALSE(contains(r.top, h));
  }
}

TEST_CASE("one step is exactly one rewrite") { CHECK(simulation_mismatches(TableVariant::Corrected) == 0); }

TEST_CASE("keeping the old state on a blank right move breaks the simulation") {
  // q1 L a -> L q1 a keeps the old state, so a state change is lost.
  CHECK(simulation_mismatches(TableVariant::KeepState) > 0);
  const TmSpec m = machine({{{q0, std::nullopt}, {q1, std::nullopt, Move::R}}}, {a});
  const Config from{q0, LeftOf{a, {}}};
  const auto succ = rewrite_successors(tm_rules(m, TableVariant::KeepState), encode_config(m, from));
  REQUIRE(succ.size() == 1);
  CHECK(decode_config(m, succ[0].result) == Config{q0, MidTape{{}, a, {}}});
  CHECK(tm_step(m, from).next == Config{q1, MidTape{{}, a, {}}});
}

TEST_CASE("validate") {
  TmSpec m = one_step();
  CHECK_NOTHROW(validate(m));
  CHECK(is_total(machine({{{q0, std::nullopt}, {q1, b, Move::N}}, {{q0, b}, {q1, b, Move::N}}}, {b})));
  CHECK_FALSE(is_total(machine({{{q0, std::nullopt}, {q1, b, Move::N}}}, {a, b})));
  m.start = 9;
  CHECK_THROWS_AS(validate(m), TuringError);
  m = one_step();
  m.tape_alphabet = {q0};
  CHECK_THROWS_AS(validate(m), TuringError);
}
