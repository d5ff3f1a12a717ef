// Symbols, strings, cards and the string operations shared by every reduction.

#ifndef PCPRED_CORE_HPP
#define PCPRED_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcpred {

/// A symbol is an opaque natural number. Names only exist in the text format.
using Symbol = std::uint64_t;

/// Finite sequence of symbols. The empty vector is epsilon.
using Str = std::vector<Symbol>;

/// A pair of strings. Read as upper/lower for PCP, left/right for rewriting.
struct Card {
  Str top;
  Str bot;

  friend bool operator==(const Card&, const Card&) = default;
  friend auto operator<=>(const Card&, const Card&) = default;
};

using Stack = std::vector<Card>;

/// Duplicate-free list of symbols.
using Alphabet = std::vector<Symbol>;

struct StrHash {
  std::size_t operator()(const Str& x) const noexcept;
};

Str concat(const Str& x, const Str& y);
Str concat(std::initializer_list<Str> parts);

bool contains(const Str& x, Symbol a);
bool is_prefix(const Str& prefix, const Str& x);

/// Concatenation of the upper sides, in stack order.
Str trace_top(std::span<const Card> stack);
/// Concatenation of the lower sides, in stack order.
Str trace_bot(std::span<const Card> stack);

Str reverse(Str x);
bool is_palindrome(const Str& x);

/// Post-grammar projection: sigma(a, []) = a, sigma(a, x/y :: A) = x sigma(a, A) y.
Str sigma(Symbol a, std::span<const Card> stack);

/// fresh([]) = 0, fresh(a :: s) = 1 + a + fresh(s). Strictly above every member.
Symbol fresh(std::span<const Symbol> symbols);

/// Insert h before every symbol: #a#b for ab.
Str hash_pre(Symbol h, const Str& x);
/// Insert h after every symbol: a#b# for ab.
Str hash_post(Symbol h, const Str& x);

/// All symbols of `parts`, deduplicated, in order of first occurrence.
Alphabet alphabet_of(std::initializer_list<std::span<const Symbol>> parts);
Alphabet alphabet_of(std::span<const Card> cards);

/// Appends to `alphabet` every symbol of `x` not yet present.
void extend_alphabet(Alphabet& alphabet, std::span<const Symbol> x);
void extend_alphabet(Alphabet& alphabet, std::span<const Card> cards);

/// Position of `a` in `alphabet`, or alphabet.size() if absent.
std::size_t index_of(const Alphabet& alphabet, Symbol a);

}  // namespace pcpred

#endif  // PCPRED_CORE_HPP
