#include "pcpred/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace pcpred {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

// ---------------------------------------------------------------- intern table

bool is_symbol_name(std::string_view t) {
  if (t.empty()) return false;
  if (t == "/" || t == "-" || t == "->" || t == "_") return false;
  if (t.front() == '%') return false;
  for (char ch : t)
    if (ch == ';' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') return false;
  return true;
}

Symbol InternTable::intern(std::string_view name) {
  if (auto c = lookup(name)) return *c;
  if (!is_symbol_name(name)) throw std::invalid_argument("not a symbol name: " + std::string(name));
  while (by_code_.contains(next_)) ++next_;
  bind(name, next_);
  return next_++;
}

void InternTable::bind(std::string_view name, Symbol code) {
  if (!is_symbol_name(name)) throw std::invalid_argument("not a symbol name: " + std::string(name));
  if (by_name_.contains(name) || by_code_.contains(code))
    throw std::invalid_argument("symbol already bound: " + std::string(name));
  by_name_.emplace(std::string(name), code);
  by_code_.emplace(code, std::string(name));
}

std::optional<Symbol> InternTable::lookup(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> InternTable::name_of(Symbol code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

const std::string& InternTable::name(Symbol code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) throw std::out_of_range("unnamed symbol " + std::to_string(code));
  return it->second;
}

void InternTable::name_fresh(const std::vector<Symbol>& codes) {
  std::set<Symbol> unnamed;
  for (Symbol c : codes)
    if (!by_code_.contains(c)) unnamed.insert(c);
  for (Symbol c : unnamed) {
    std::string n;
    do n = "_f" + std::to_string(next_fresh_++);
    while (by_name_.contains(n));
    bind(n, c);
  }
}

// ---------------------------------------------------------------- lexing

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto semi = line.find(';'); semi != std::string_view::npos) line = line.substr(0, semi);
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (text.empty()) break;
  }
  return out;
}

std::size_t parse_index(std::string_view t, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) throw ParseError(line, "expected a natural number, got '" + std::string(t) + "'");
  return v;
}

class Reader {
 public:
  Reader(InternTable& symbols) : symbols_(symbols) {}

  Symbol symbol(std::string_view t, std::size_t line) {
    if (!is_symbol_name(t)) throw ParseError(line, "'" + std::string(t) + "' is not a symbol name");
    return symbols_.intern(t);
  }

  Str string(std::span<const std::string_view> tokens, std::size_t line) {
    if (tokens.empty()) throw ParseError(line, "expected a string (use '-' for the empty string)");
    if (tokens.size() == 1 && tokens[0] == "-") return {};
    Str s;
    for (std::string_view t : tokens) s.push_back(symbol(t, line));
    return s;
  }

  Card card(std::span<const std::string_view> tokens, std::size_t line) {
    auto slash = std::find(tokens.begin(), tokens.end(), std::string_view("/"));
    if (slash == tokens.end()) throw ParseError(line, "expected a card 'x / y'");
    if (std::find(slash + 1, tokens.end(), std::string_view("/")) != tokens.end())
      throw ParseError(line, "more than one '/' in card");
    auto k = static_cast<std::size_t>(slash - tokens.begin());
    return {string(tokens.subspan(0, k), line), string(tokens.subspan(k + 1), line)};
  }

 private:
  InternTable& symbols_;
};

// Sections of one instance file: directive -> (line, arguments), plus card
// lines grouped under the most recent card-taking directive.
struct Sections {
  std::map<std::string, std::pair<std::size_t, std::vector<std::string_view>>, std::less<>> args;
  std::map<std::string, std::vector<Line>, std::less<>> cards;

  bool has(std::string_view d) const { return args.contains(d); }

  const std::vector<std::string_view>& get(std::string_view d) const { return args.find(d)->second.second; }
  std::size_t line_of(std::string_view d) const { return args.find(d)->second.first; }
};

struct Grammar {
  std::vector<std::string_view> allowed;     // directives in grammar order
  std::vector<std::string_view> required;
  std::vector<std::string_view> card_owners;  // directives followed by card lines; "" = top level
};

Grammar grammar_for(Problem p) {
  switch (p) {
    case Problem::Pcp: return {{}, {}, {""}};
    case Problem::Mpcp: return {{"%first"}, {"%first"}, {"%first"}};
    case Problem::Sr: return {{"%rules", "%from", "%to"}, {"%rules", "%from", "%to"}, {"%rules"}};
    case Problem::Srh: return {{"%rules", "%from", "%target"}, {"%rules", "%from", "%target"}, {"%rules"}};
    case Problem::SrhPrime: return {{"%rules", "%from", "%targets"}, {"%rules", "%from", "%targets"}, {"%rules"}};
    case Problem::Cfp: return {{"%rules", "%marker"}, {"%rules", "%marker"}, {"%rules"}};
    case Problem::Cfi:
      return {{"%grammar1", "%grammar2", "%marker"}, {"%grammar1", "%grammar2", "%marker"}, {"%grammar1", "%grammar2"}};
    case Problem::Tm:
      return {{"%states", "%tape", "%start", "%halt", "%input"}, {"%states", "%tape", "%start"}, {}};
  }
  return {};
}

bool in(const std::vector<std::string_view>& v, std::string_view x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Sections collect(const std::vector<Line>& lines, std::size_t begin, Problem p) {
  const Grammar g = grammar_for(p);
  Sections s;
  std::optional<std::string> owner;
  if (in(g.card_owners, "")) owner = "";
  if (p == Problem::Tm) owner = "%start";  // transition lines may appear anywhere
  for (std::size_t i = begin; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::string_view head = l.tokens.front();
    if (head.front() == '%') {
      if (!in(g.allowed, head))
        throw ParseError(l.number, "unexpected directive " + std::string(head) + " for " + std::string(problem_tag(p)));
      if (s.has(head)) throw ParseError(l.number, "duplicate section " + std::string(head));
      s.args[std::string(head)] = {l.number, {l.tokens.begin() + 1, l.tokens.end()}};
      if (p == Problem::Tm) continue;
      if (in(g.card_owners, head)) owner = std::string(head);
      else if (!in(g.card_owners, "")) owner.reset();
      continue;
    }
    if (!owner) throw ParseError(l.number, "line outside of any section");
    s.cards[*owner].push_back(l);
  }
  for (std::string_view d : g.required)
    if (!s.has(d)) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing section " + std::string(d));
  return s;
}

std::vector<Card> cards_of(const Sections& s, std::string_view owner, Reader& r) {
  std::vector<Card> out;
  auto it = s.cards.find(owner);
  if (it == s.cards.end()) return out;
  for (const Line& l : it->second) out.push_back(r.card(l.tokens, l.number));
  return out;
}

void expect_no_args(const Sections& s, std::string_view d) {
  if (!s.get(d).empty()) throw ParseError(s.line_of(d), std::string(d) + " takes no arguments");
}

Symbol one_symbol(const Sections& s, std::string_view d, Reader& r) {
  const auto& a = s.get(d);
  if (a.size() != 1) throw ParseError(s.line_of(d), std::string(d) + " expects exactly one symbol");
  return r.symbol(a[0], s.line_of(d));
}

Str string_arg(const Sections& s, std::string_view d, Reader& r) { return r.string(s.get(d), s.line_of(d)); }

Str symbol_list(const Sections& s, std::string_view d, Reader& r) {
  Str out;
  for (std::string_view t : s.get(d)) {
    Symbol a = r.symbol(t, s.line_of(d));
    if (contains(out, a)) throw ParseError(s.line_of(d), "duplicate symbol " + std::string(t) + " in " + std::string(d));
    out.push_back(a);
  }
  return out;
}

TmInstance parse_tm(const Sections& s, Reader& r, const InternTable& symbols) {
  TmInstance t;
  TmSpec& m = t.machine;
  m.states = symbol_list(s, "%states", r);
  m.tape_alphabet = symbol_list(s, "%tape", r);
  const std::size_t known = symbols.by_name().size();
  m.start = one_symbol(s, "%start", r);
  if (s.has("%halt")) m.halting = symbol_list(s, "%halt", r);
  auto check_known = [&](std::size_t line) {
    if (symbols.by_name().size() != known) throw ParseError(line, "symbol not declared in %states or %tape");
  };
  check_known(s.line_of("%start"));
  if (s.has("%halt")) check_known(s.line_of("%halt"));

  auto it = s.cards.find("%start");
  if (it != s.cards.end()) {
    for (const Line& l : it->second) {
      const auto& k = l.tokens;
      if (k.size() != 6 || k[2] != "->") throw ParseError(l.number, "expected a transition 'q r -> q' w M'");
      auto cell = [&](std::string_view tok) -> Cell {
        if (tok == "_") return std::nullopt;
        return r.symbol(tok, l.number);
      };
      Symbol q = r.symbol(k[0], l.number);
      Cell read = cell(k[1]);
      Transition tr;
      tr.next = r.symbol(k[3], l.number);
      tr.write = cell(k[4]);
      if (k[5] == "L") tr.move = Move::L;
      else if (k[5] == "N") tr.move = Move::N;
      else if (k[5] == "R") tr.move = Move::R;
      else throw ParseError(l.number, "move must be L, N or R");
      check_known(l.number);
      if (!m.delta.emplace(std::pair{q, read}, tr).second) throw ParseError(l.number, "duplicate transition");
    }
  }
  if (s.has("%input")) t.input = string_arg(s, "%input", r);
  check_known(s.has("%input") ? s.line_of("%input") : 1);
  try {
    validate(m);
  } catch (const TuringError& e) {
    throw ParseError(s.line_of("%states"), e.what());
  }
  for (Symbol a : t.input)
    if (!contains(m.tape_alphabet, a)) throw ParseError(s.line_of("%input"), "input symbol is not a tape symbol");
  return t;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text, InternTable seed) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty instance file");
  const Line& head = lines.front();
  if (head.tokens.front() != "%problem" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected '%problem <tag>'");
  auto p = parse_problem_tag(head.tokens[1]);
  if (!p) throw ParseError(head.number, "unknown problem tag " + std::string(head.tokens[1]));

  ParsedInstance out{Instance{}, std::move(seed)};
  Reader r(out.symbols);
  const Sections s = collect(lines, 1, *p);

  switch (*p) {
    case Problem::Pcp: out.instance = PcpInstance{cards_of(s, "", r)}; break;
    case Problem::Mpcp: {
      MpcpInstance m;
      m.first = r.card(s.get("%first"), s.line_of("%first"));
      m.cards = cards_of(s, "%first", r);
      out.instance = std::move(m);
      break;
    }
    case Problem::Sr: {
      expect_no_args(s, "%rules");
      SrInstance i;
      i.rules = cards_of(s, "%rules", r);
      i.from = string_arg(s, "%from", r);
      i.to = string_arg(s, "%to", r);
      out.instance = std::move(i);
      break;
    }
    case Problem::Srh: {
      expect_no_args(s, "%rules");
      SrhInstance i;
      i.rules = cards_of(s, "%rules", r);
      i.from = string_arg(s, "%from", r);
      i.target = one_symbol(s, "%target", r);
      out.instance = std::move(i);
      break;
    }
    case Problem::SrhPrime: {
      expect_no_args(s, "%rules");
      SrhPrimeInstance i;
      i.rules = cards_of(s, "%rules", r);
      i.from = string_arg(s, "%from", r);
      i.targets = string_arg(s, "%targets", r);
      out.instance = std::move(i);
      break;
    }
    case Problem::Cfp: {
      expect_no_args(s, "%rules");
      CfpInstance i;
      i.rules = cards_of(s, "%rules", r);
      i.marker = one_symbol(s, "%marker", r);
      out.instance = std::move(i);
      break;
    }
    case Problem::Cfi: {
      expect_no_args(s, "%grammar1");
      expect_no_args(s, "%grammar2");
      CfiInstance i;
      i.rules1 = cards_of(s, "%grammar1", r);
      i.rules2 = cards_of(s, "%grammar2", r);
      i.marker = one_symbol(s, "%marker", r);
      out.instance = std::move(i);
      break;
    }
    case Problem::Tm: out.instance = parse_tm(s, r, out.symbols); break;
  }
  return out;
}

// ---------------------------------------------------------------- printing

std::vector<Symbol> symbols_of(const Instance& inst) {
  Alphabet a;
  auto cards = [&](const std::vector<Card>& cs) { extend_alphabet(a, std::span<const Card>(cs)); };
  auto str = [&](const Str& x) { extend_alphabet(a, std::span<const Symbol>(x)); };
  std::visit(
      [&](const auto& i) {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, TmInstance>) {
          str(i.machine.states);
          str(i.machine.tape_alphabet);
          str(Str{i.machine.start});
          str(i.machine.halting);
          for (const auto& [k, tr] : i.machine.delta) {
            str(Str{k.first, tr.next});
            if (k.second) str(Str{*k.second});
            if (tr.write) str(Str{*tr.write});
          }
          str(i.input);
        } else if constexpr (std::is_same_v<T, PcpInstance>) {
          cards(i.cards);
        } else if constexpr (std::is_same_v<T, MpcpInstance>) {
          cards(i.all_cards());
        } else if constexpr (std::is_same_v<T, CfiInstance>) {
          cards(i.rules1);
          cards(i.rules2);
          str(Str{i.marker});
        } else if constexpr (std::is_same_v<T, CfpInstance>) {
          cards(i.rules);
          str(Str{i.marker});
        } else {
          cards(i.rules);
          str(i.from);
          if constexpr (std::is_same_v<T, SrInstance>) str(i.to);
          else if constexpr (std::is_same_v<T, SrhInstance>) str(Str{i.target});
          else str(i.targets);
        }
      },
      inst);
  return a;
}

namespace {

class Printer {
 public:
  explicit Printer(const InternTable& t) : t_(t) {}

  std::string str(const Str& x) const {
    if (x.empty()) return "-";
    std::string out;
    for (Symbol a : x) {
      if (!out.empty()) out += ' ';
      out += t_.name(a);
    }
    return out;
  }

  std::string list(const Str& x) const {
    std::string out;
    for (Symbol a : x) out += ' ' + t_.name(a);
    return out;
  }

  std::string card(const Card& c) const { return str(c.top) + " / " + str(c.bot); }

  void cards(std::ostream& os, const std::vector<Card>& cs) const {
    for (const Card& c : cs) os << card(c) << '\n';
  }

  std::string cell(const Cell& c) const { return c ? t_.name(*c) : "_"; }

 private:
  const InternTable& t_;
};

const char* move_name(Move m) {
  switch (m) {
    case Move::L: return "L";
    case Move::N: return "N";
    case Move::R: return "R";
  }
  return "N";
}

}  // namespace

std::string print_instance(const Instance& inst, InternTable& symbols) {
  symbols.name_fresh(symbols_of(inst));
  const Printer pr(symbols);
  std::ostringstream os;
  os << "%problem " << problem_tag(problem_of(inst)) << '\n';
  std::visit(
      [&](const auto& i) {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, TmInstance>) {
          const TmSpec& m = i.machine;
          os << "%states" << pr.list(m.states) << '\n';
          os << "%tape" << pr.list(m.tape_alphabet) << '\n';
          os << "%start " << symbols.name(m.start) << '\n';
          os << "%halt" << pr.list(m.halting) << '\n';
          for (Symbol q : m.states) {
            std::vector<Cell> reads{std::nullopt};
            for (Symbol a : m.tape_alphabet) reads.push_back(a);
            for (const Cell& r : reads)
              if (const Transition* tr = m.transition(q, r))
                os << symbols.name(q) << ' ' << pr.cell(r) << " -> " << symbols.name(tr->next) << ' '
                   << pr.cell(tr->write) << ' ' << move_name(tr->move) << '\n';
          }
          os << "%input " << pr.str(i.input) << '\n';
        } else if constexpr (std::is_same_v<T, PcpInstance>) {
          pr.cards(os, i.cards);
        } else if constexpr (std::is_same_v<T, MpcpInstance>) {
          os << "%first " << pr.card(i.first) << '\n';
          pr.cards(os, i.cards);
        } else if constexpr (std::is_same_v<T, CfpInstance>) {
          os << "%rules\n";
          pr.cards(os, i.rules);
          os << "%marker " << symbols.name(i.marker) << '\n';
        } else if constexpr (std::is_same_v<T, CfiInstance>) {
          os << "%grammar1\n";
          pr.cards(os, i.rules1);
          os << "%grammar2\n";
          pr.cards(os, i.rules2);
          os << "%marker " << symbols.name(i.marker) << '\n';
        } else {
          os << "%rules\n";
          pr.cards(os, i.rules);
          os << "%from " << pr.str(i.from) << '\n';
          if constexpr (std::is_same_v<T, SrInstance>) os << "%to " << pr.str(i.to) << '\n';
          else if constexpr (std::is_same_v<T, SrhInstance>) os << "%target " << symbols.name(i.target) << '\n';
          else os << "%targets " << pr.str(i.targets) << '\n';
        }
      },
      inst);
  return os.str();
}

// ---------------------------------------------------------------- witnesses

namespace {

std::size_t card_count(const Instance& inst, bool second) {
  return std::visit(
      [&](const auto& i) -> std::size_t {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, PcpInstance>) return i.cards.size();
        else if constexpr (std::is_same_v<T, MpcpInstance>) return i.cards.size() + 1;
        else if constexpr (std::is_same_v<T, CfiInstance>) return second ? i.rules2.size() : i.rules1.size();
        else if constexpr (std::is_same_v<T, TmInstance>) return 0;
        else return i.rules.size();
      },
      inst);
}

std::string indices_line(const StackWitness& w) {
  std::string out = "indices:";
  for (std::size_t i : w) out += ' ' + std::to_string(i);
  return out;
}

}  // namespace

ParsedWitness parse_witness(std::string_view text, const Instance* inst) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty witness file");
  const Line& head = lines.front();
  if (head.tokens.front() != "%witness" || head.tokens.size() != 2)
    throw ParseError(head.number, "expected '%witness <tag>'");
  auto p = parse_problem_tag(head.tokens[1]);
  if (!p) throw ParseError(head.number, "unknown problem tag " + std::string(head.tokens[1]));
  if (inst && problem_of(*inst) != *p)
    throw ParseError(head.number, "witness is for " + std::string(head.tokens[1]) + " but the instance is " +
                                      std::string(problem_tag(problem_of(*inst))));

  ParsedWitness out;
  out.problem = *p;
  auto indices = [&](const Line& l, bool second) {
    if (l.tokens.front() != "indices:") throw ParseError(l.number, "expected 'indices: ...'");
    StackWitness w;
    for (std::size_t k = 1; k < l.tokens.size(); ++k) {
      std::size_t v = parse_index(l.tokens[k], l.number);
      if (inst && v >= card_count(*inst, second))
        throw ParseError(l.number, "index " + std::to_string(v) + " out of range");
      w.push_back(v);
    }
    return w;
  };

  switch (*p) {
    case Problem::Tm: {
      if (lines.size() != 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "halt-steps:")
        throw ParseError(lines.size() > 1 ? lines[1].number : head.number, "expected 'halt-steps: n'");
      out.witness = HaltWitness{parse_index(lines[1].tokens[1], lines[1].number)};
      break;
    }
    case Problem::SrhPrime:
    case Problem::Srh:
    case Problem::Sr: {
      if (lines.size() < 2 || lines[1].tokens.size() != 1 || lines[1].tokens[0] != "steps:")
        throw ParseError(lines.size() > 1 ? lines[1].number : head.number, "expected 'steps:'");
      SrDerivation d;
      for (std::size_t k = 2; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'rule cut'");
        RewriteStep s{parse_index(l.tokens[0], l.number), parse_index(l.tokens[1], l.number)};
        if (inst && s.rule >= card_count(*inst, false))
          throw ParseError(l.number, "rule " + std::to_string(s.rule) + " out of range");
        d.push_back(s);
      }
      out.witness = std::move(d);
      break;
    }
    case Problem::Cfi: {
      if (lines.size() != 3) throw ParseError(head.number, "expected two 'indices:' lines");
      out.witness = CfiWitness{indices(lines[1], false), indices(lines[2], true)};
      break;
    }
    default: {
      if (lines.size() != 2) throw ParseError(head.number, "expected one 'indices:' line");
      out.witness = indices(lines[1], false);
      break;
    }
  }
  return out;
}

std::string print_witness(Problem problem, const Witness& w) {
  std::ostringstream os;
  os << "%witness " << problem_tag(problem) << '\n';
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HaltWitness>) {
          os << "halt-steps: " << x.steps << '\n';
        } else if constexpr (std::is_same_v<T, SrDerivation>) {
          os << "steps:\n";
          for (const RewriteStep& s : x) os << s.rule << ' ' << s.cut << '\n';
        } else if constexpr (std::is_same_v<T, CfiWitness>) {
          os << indices_line(x.first) << '\n' << indices_line(x.second) << '\n';
        } else {
          os << indices_line(x) << '\n';
        }
      },
      w);
  return os.str();
}

}  // namespace pcpred
