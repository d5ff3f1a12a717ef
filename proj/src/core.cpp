#include "pcpred/core.hpp"

#include <algorithm>

namespace pcpred {

std::size_t StrHash::operator()(const Str& x) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ x.size();
  for (Symbol a : x) {
    h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Str concat(const Str& x, const Str& y) {
  Str out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

Str concat(std::initializer_list<Str> parts) {
  Str out;
  for (const Str& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool contains(const Str& x, Symbol a) {
  return std::find(x.begin(), x.end(), a) != x.end();
}

bool is_prefix(const Str& prefix, const Str& x) {
  return prefix.size() <= x.size() && std::equal(prefix.begin(), prefix.end(), x.begin());
}

Str trace_top(std::span<const Card> stack) {
  Str out;
  for (const Card& c : stack) out.insert(out.end(), c.top.begin(), c.top.end());
  return out;
}

Str trace_bot(std::span<const Card> stack) {
  Str out;
  for (const Card& c : stack) out.insert(out.end(), c.bot.begin(), c.bot.end());
  return out;
}

Str reverse(Str x) {
  std::reverse(x.begin(), x.end());
  return x;
}

bool is_palindrome(const Str& x) {
  return std::equal(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(x.size() / 2), x.rbegin());
}

Str sigma(Symbol a, std::span<const Card> stack) {
  // Tops in order, the marker, then bottoms innermost first.
  Str out = trace_top(stack);
  out.push_back(a);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it)
    out.insert(out.end(), it->bot.begin(), it->bot.end());
  return out;
}

Symbol fresh(std::span<const Symbol> symbols) {
  Symbol acc = 0;
  for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) acc = 1 + *it + acc;
  return acc;
}

Str hash_pre(Symbol h, const Str& x) {
  Str out;
  out.reserve(2 * x.size());
  for (Symbol a : x) {
    out.push_back(h);
    out.push_back(a);
  }
  return out;
}

Str hash_post(Symbol h, const Str& x) {
  Str out;
  out.reserve(2 * x.size());
  for (Symbol a : x) {
    out.push_back(a);
    out.push_back(h);
  }
  return out;
}

std::size_t index_of(const Alphabet& alphabet, Symbol a) {
  return static_cast<std::size_t>(std::find(alphabet.begin(), alphabet.end(), a) - alphabet.begin());
}

void extend_alphabet(Alphabet& alphabet, std::span<const Symbol> x) {
  for (Symbol a : x)
    if (!contains(alphabet, a)) alphabet.push_back(a);
}

void extend_alphabet(Alphabet& alphabet, std::span<const Card> cards) {
  for (const Card& c : cards) {
    extend_alphabet(alphabet, c.top);
    extend_alphabet(alphabet, c.bot);
  }
}

Alphabet alphabet_of(std::initializer_list<std::span<const Symbol>> parts) {
  Alphabet out;
  for (auto part : parts) extend_alphabet(out, part);
  return out;
}

Alphabet alphabet_of(std::span<const Card> cards) {
  Alphabet out;
  extend_alphabet(out, cards);
  return out;
}

}  // namespace pcpred
