// Single-tape Turing machines over the written part of the tape, their string
// encoding, and the compiler from transitions to rewriting rules.
//
// Only cells the machine has written are represented. The head is either on a
// written cell (MidTape), left of all of them (LeftOf), right of all of them
// (RightOf), or nothing has been written yet (EmptyTape). Configurations are
// encoded with a left marker L and a right marker R around the written part
// and the state symbol immediately left of the cell under the head:
//
//   EmptyTape        q L R
//   LeftOf(a, x)     q L a x R
//   RightOf(a, x)    L x a q R
//   MidTape(x, a, y) L x q a y R

#ifndef PCPRED_TURING_HPP
#define PCPRED_TURING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pcpred/core.hpp"

namespace pcpred {

class TuringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Move { L, N, R };

/// A tape cell value or a write action; nullopt is the blank (read) or
/// "write nothing" (write).
using Cell = std::optional<Symbol>;

struct Transition {
  Symbol next = 0;
  Cell write;
  Move move = Move::N;
  friend bool operator==(const Transition&, const Transition&) = default;
};

struct TmSpec {
  Alphabet tape_alphabet;
  Alphabet states;
  Symbol start = 0;
  Alphabet halting;
  std::map<std::pair<Symbol, Cell>, Transition> delta;

  bool is_halting(Symbol q) const;
  const Transition* transition(Symbol q, Cell read) const;

  /// fresh(tape_alphabet ++ states)
  Symbol left_marker() const;
  /// fresh(tape_alphabet ++ states ++ [left_marker])
  Symbol right_marker() const;

  friend bool operator==(const TmSpec&, const TmSpec&) = default;
};

/// Throws TuringError unless start and halting states are states, state and
/// tape codes are disjoint and duplicate-free, and every transition mentions
/// only known symbols.
void validate(const TmSpec& m);

/// True when every non-halting state has a transition for blank and for every
/// tape symbol.
bool is_total(const TmSpec& m);

struct EmptyTape {
  friend bool operator==(const EmptyTape&, const EmptyTape&) = default;
};
struct LeftOf {
  Symbol next = 0;  // leftmost written symbol
  Str rest;
  friend bool operator==(const LeftOf&, const LeftOf&) = default;
};
struct RightOf {
  Symbol prev = 0;  // rightmost written symbol
  Str rest;         // written symbols before it, left to right
  friend bool operator==(const RightOf&, const RightOf&) = default;
};
struct MidTape {
  Str left;
  Symbol head = 0;
  Str right;
  friend bool operator==(const MidTape&, const MidTape&) = default;
};

using Tape = std::variant<EmptyTape, LeftOf, RightOf, MidTape>;

struct Config {
  Symbol state = 0;
  Tape tape;
  friend bool operator==(const Config&, const Config&) = default;
};

Cell read_head(const Tape& t);

/// q0 with the head left of the input (EmptyTape for the empty input).
Config initial_config(const TmSpec& m, const Str& input);

enum class StepStatus { Moved, Halted, Stuck };

struct StepResult {
  StepStatus status = StepStatus::Halted;
  Config next;  // meaningful only when Moved
};

/// Halted in a halting state, Stuck when no transition is defined.
/// Throws TuringError if the state is not a state of the machine.
StepResult tm_step(const TmSpec& m, const Config& c);

struct RunResult {
  bool halted = false;
  bool stuck = false;
  std::size_t steps = 0;
  Config final;
};

RunResult tm_run(const TmSpec& m, const Str& input, std::size_t max_steps);

Str encode_config(const TmSpec& m, const Config& c);
std::optional<Config> decode_config(const TmSpec& m, const Str& s);

/// Which rule to emit for the left-overflow case of the row (read blank,
/// write nothing, move right). KeepState rewrites q1 L a to L q1 a and so
/// loses the state change; Corrected uses the successor state.
enum class TableVariant { Corrected, KeepState };

/// Rewriting rules simulating the machine one step per rewrite. Halting
/// states emit no rules.
std::vector<Card> tm_rules(const TmSpec& m, TableVariant variant = TableVariant::Corrected);

}  // namespace pcpred

#endif  // PCPRED_TURING_HPP
