#include "pcpred/turing.hpp"

#include <algorithm>

namespace pcpred {

bool TmSpec::is_halting(Symbol q) const { return contains(halting, q); }

const Transition* TmSpec::transition(Symbol q, Cell read) const {
  auto it = delta.find({q, read});
  return it == delta.end() ? nullptr : &it->second;
}

Symbol TmSpec::left_marker() const {
  return fresh(concat(tape_alphabet, states));
}

Symbol TmSpec::right_marker() const {
  Str all = concat(tape_alphabet, states);
  all.push_back(left_marker());
  return fresh(all);
}

namespace {

bool duplicate_free(const Alphabet& a) {
  Alphabet sorted = a;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool tape_ok(const TmSpec& m, Cell c) { return !c || contains(m.tape_alphabet, *c); }

}  // namespace

void validate(const TmSpec& m) {
  if (!duplicate_free(m.tape_alphabet)) throw TuringError("tape alphabet has duplicates");
  if (!duplicate_free(m.states)) throw TuringError("state list has duplicates");
  for (Symbol q : m.states)
    if (contains(m.tape_alphabet, q)) throw TuringError("state and tape symbol codes overlap");
  if (!contains(m.states, m.start)) throw TuringError("start is not a state");
  for (Symbol h : m.halting)
    if (!contains(m.states, h)) throw TuringError("halting state is not a state");
  for (const auto& [key, t] : m.delta) {
    if (!contains(m.states, key.first) || !contains(m.states, t.next))
      throw TuringError("transition mentions an unknown state");
    if (!tape_ok(m, key.second) || !tape_ok(m, t.write))
      throw TuringError("transition mentions an unknown tape symbol");
  }
}

bool is_total(const TmSpec& m) {
  for (Symbol q : m.states) {
    if (m.is_halting(q)) continue;
    if (!m.transition(q, std::nullopt)) return false;
    for (Symbol a : m.tape_alphabet)
      if (!m.transition(q, a)) return false;
  }
  return true;
}

Cell read_head(const Tape& t) {
  if (const auto* mid = std::get_if<MidTape>(&t)) return mid->head;
  return std::nullopt;
}

Config initial_config(const TmSpec& m, const Str& input) {
  if (input.empty()) return {m.start, EmptyTape{}};
  return {m.start, LeftOf{input.front(), Str(input.begin() + 1, input.end())}};
}

namespace {

Tape write_cell(const Tape& t, Symbol b) {
  return std::visit(
      [b](const auto& s) -> Tape {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptyTape>) {
          return MidTape{{}, b, {}};
        } else if constexpr (std::is_same_v<T, LeftOf>) {
          Str right{s.next};
          right.insert(right.end(), s.rest.begin(), s.rest.end());
          return MidTape{{}, b, right};
        } else if constexpr (std::is_same_v<T, RightOf>) {
          Str left = s.rest;
          left.push_back(s.prev);
          return MidTape{left, b, {}};
        } else {
          return MidTape{s.left, b, s.right};
        }
      },
      t);
}

Tape move_left(const Tape& t) {
  if (const auto* r = std::get_if<RightOf>(&t)) return MidTape{r->rest, r->prev, {}};
  if (const auto* mid = std::get_if<MidTape>(&t)) {
    if (mid->left.empty()) return LeftOf{mid->head, mid->right};
    Str right{mid->head};
    right.insert(right.end(), mid->right.begin(), mid->right.end());
    return MidTape{Str(mid->left.begin(), mid->left.end() - 1), mid->left.back(), right};
  }
  return t;
}

Tape move_right(const Tape& t) {
  if (const auto* l = std::get_if<LeftOf>(&t)) return MidTape{{}, l->next, l->rest};
  if (const auto* mid = std::get_if<MidTape>(&t)) {
    if (mid->right.empty()) return RightOf{mid->head, mid->left};
    Str left = mid->left;
    left.push_back(mid->head);
    return MidTape{left, mid->right.front(), Str(mid->right.begin() + 1, mid->right.end())};
  }
  return t;
}

}  // namespace

StepResult tm_step(const TmSpec& m, const Config& c) {
  if (!contains(m.states, c.state)) throw TuringError("configuration state is not a state of the machine");
  if (m.is_halting(c.state)) return {StepStatus::Halted, c};
  const Transition* t = m.transition(c.state, read_head(c.tape));
  if (!t) return {StepStatus::Stuck, c};
  Tape tape = t->write ? write_cell(c.tape, *t->write) : c.tape;
  switch (t->move) {
    case Move::L: tape = move_left(tape); break;
    case Move::R: tape = move_right(tape); break;
    case Move::N: break;
  }
  return {StepStatus::Moved, {t->next, std::move(tape)}};
}

RunResult tm_run(const TmSpec& m, const Str& input, std::size_t max_steps) {
  RunResult out;
  out.final = initial_config(m, input);
  while (true) {
    StepResult r = tm_step(m, out.final);
    if (r.status == StepStatus::Halted) {
      out.halted = true;
      return out;
    }
    if (r.status == StepStatus::Stuck) {
      out.stuck = true;
      return out;
    }
    if (out.steps == max_steps) return out;
    out.final = std::move(r.next);
    ++out.steps;
  }
}

Str encode_config(const TmSpec& m, const Config& c) {
  const Symbol lm = m.left_marker();
  const Symbol rm = m.right_marker();
  const Symbol q = c.state;
  return std::visit(
      [&](const auto& s) -> Str {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EmptyTape>) {
          return {q, lm, rm};
        } else if constexpr (std::is_same_v<T, LeftOf>) {
          return concat({{q, lm, s.next}, s.rest, {rm}});
        } else if constexpr (std::is_same_v<T, RightOf>) {
          return concat({{lm}, s.rest, {s.prev, q, rm}});
        } else {
          return concat({{lm}, s.left, {q, s.head}, s.right, {rm}});
        }
      },
      c.tape);
}

std::optional<Config> decode_config(const TmSpec& m, const Str& s) {
  const Symbol lm = m.left_marker();
  const Symbol rm = m.right_marker();
  // Exactly one state symbol, one of each marker, everything else tape symbols.
  std::optional<std::size_t> qpos;
  std::size_t lms = 0, rms = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == lm) {
      ++lms;
    } else if (s[i] == rm) {
      ++rms;
    } else if (contains(m.states, s[i])) {
      if (qpos) return std::nullopt;
      qpos = i;
    } else if (!contains(m.tape_alphabet, s[i])) {
      return std::nullopt;
    }
  }
  if (!qpos || lms != 1 || rms != 1 || s.size() < 3 || s.back() != rm) return std::nullopt;
  const Symbol q = s[*qpos];
  const auto at = [&s](std::size_t i) { return s.begin() + static_cast<std::ptrdiff_t>(i); };

  if (*qpos == 0) {
    if (s[1] != lm) return std::nullopt;
    if (s.size() == 3) return Config{q, EmptyTape{}};
    return Config{q, LeftOf{s[2], Str(at(3), s.end() - 1)}};
  }
  if (s.front() != lm) return std::nullopt;
  if (*qpos == s.size() - 2) {
    if (*qpos < 2) return std::nullopt;  // L q R has no written symbol
    return Config{q, RightOf{s[*qpos - 1], Str(at(1), at(*qpos - 1))}};
  }
  return Config{q, MidTape{Str(at(1), at(*qpos)), s[*qpos + 1], Str(at(*qpos + 2), s.end() - 1)}};
}

std::vector<Card> tm_rules(const TmSpec& m, TableVariant variant) {
  const Symbol lm = m.left_marker();
  const Symbol rm = m.right_marker();
  const Alphabet& sigma_ = m.tape_alphabet;
  std::vector<Card> out;
  auto rule = [&out](Str x, Str y) { out.push_back({std::move(x), std::move(y)}); };

  auto emit = [&](Symbol q1, Cell read, const Transition& t) {
    const Symbol q2 = t.next;
    if (!read) {
      if (!t.write) {
        switch (t.move) {
          case Move::L:
            rule({q1, lm}, {q2, lm});
            for (Symbol a : sigma_) rule({a, q1, rm}, {q2, a, rm});
            break;
          case Move::N:
            rule({q1, lm}, {q2, lm});
            rule({q1, rm}, {q2, rm});
            break;
          case Move::R: {
            rule({q1, lm, rm}, {q2, lm, rm});
            rule({q1, rm}, {q2, rm});
            const Symbol after = variant == TableVariant::KeepState ? q1 : q2;
            for (Symbol a : sigma_) rule({q1, lm, a}, {lm, after, a});
            break;
          }
        }
      } else {
        const Symbol b = *t.write;
        switch (t.move) {
          case Move::L:
            rule({q1, lm}, {q2, lm, b});
            for (Symbol a : sigma_) rule({a, q1, rm}, {q2, a, b, rm});
            break;
          case Move::N:
            rule({q1, lm}, {lm, q2, b});
            rule({q1, rm}, {q2, b, rm});
            break;
          case Move::R:
            rule({q1, lm}, {lm, b, q2});
            rule({q1, rm}, {b, q2, rm});
            break;
        }
      }
      return;
    }
    const Symbol a = *read;
    const Symbol b = t.write.value_or(a);
    switch (t.move) {
      case Move::L:
        rule({lm, q1, a}, {q2, lm, b});
        for (Symbol c : sigma_) rule({c, q1, a}, {q2, c, b});
        break;
      case Move::N:
        rule({q1, a}, {q2, b});
        break;
      case Move::R:
        rule({q1, a}, {b, q2});
        break;
    }
  };

  for (Symbol q : m.states) {
    if (m.is_halting(q)) continue;
    if (const Transition* t = m.transition(q, std::nullopt)) emit(q, std::nullopt, *t);
    for (Symbol a : sigma_)
      if (const Transition* t = m.transition(q, a)) emit(q, a, *t);
  }
  return out;
}

}  // namespace pcpred
