// Line-oriented text formats for instances and witnesses.
//
// Instance files start with `%problem <tag>`. Strings are space-separated
// symbol names, `-` is the empty string, `;` starts a comment. Cards are
// written `x / y`. Section directives per problem:
//
//   pcp    card lines
//   mpcp   %first x / y, then card lines
//   sr     %rules, card lines, %from <str>, %to <str>
//   srh    %rules, card lines, %from <str>, %target <sym>
//   srh'   %rules, card lines, %from <str>, %targets <str>
//   cfp    %rules, card lines, %marker <sym>
//   cfi    %grammar1, card lines, %grammar2, card lines, %marker <sym>
//   tm     %states, %tape, %start, %halt, transition lines
//          `q r -> q' w M` (`_` = blank / write nothing, M in L N R), %input
//
// Witness files start with `%witness <tag>` followed by `indices: i ...`
// (twice for cfi), `steps:` and one `rule cut` line per step, or
// `halt-steps: n`.

#ifndef PCPRED_TEXT_FORMAT_HPP
#define PCPRED_TEXT_FORMAT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcpred/chain.hpp"

namespace pcpred {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Names <-> symbol codes. New names get the next unused code.
class InternTable {
 public:
  /// Code for `name`, allocating one on first use.
  Symbol intern(std::string_view name);
  /// Binds `name` to `code`; both must be unused.
  void bind(std::string_view name, Symbol code);

  std::optional<Symbol> lookup(std::string_view name) const;
  std::optional<std::string> name_of(Symbol code) const;
  /// Name for a code; throws std::out_of_range if unnamed.
  const std::string& name(Symbol code) const;

  /// Names every unnamed code of `codes` `_f0`, `_f1`, ... in increasing
  /// code order, skipping names already taken.
  void name_fresh(const std::vector<Symbol>& codes);

  const std::map<std::string, Symbol, std::less<>>& by_name() const { return by_name_; }

 private:
  std::map<std::string, Symbol, std::less<>> by_name_;
  std::map<Symbol, std::string> by_code_;
  Symbol next_ = 0;
  std::size_t next_fresh_ = 0;
};

/// Reserved tokens can never be symbol names.
bool is_symbol_name(std::string_view token);

struct ParsedInstance {
  Instance instance;
  InternTable symbols;
};

/// Parses with a fresh intern table, or continues `seed` when given.
ParsedInstance parse_instance(std::string_view text, InternTable seed = {});

/// Every symbol code occurring in the instance.
std::vector<Symbol> symbols_of(const Instance& inst);

/// Canonical text. Unnamed codes are named via InternTable::name_fresh first.
std::string print_instance(const Instance& inst, InternTable& symbols);

struct ParsedWitness {
  Problem problem = Problem::Pcp;
  Witness witness;
};

/// When `inst` is given, the tag must match and indices must be in range.
ParsedWitness parse_witness(std::string_view text, const Instance* inst = nullptr);
std::string print_witness(Problem problem, const Witness& w);

}  // namespace pcpred

#endif  // PCPRED_TEXT_FORMAT_HPP
