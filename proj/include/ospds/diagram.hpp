#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ospds {

// Input that does not match the diagram grammar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input on which an operation is not defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Symbol : std::uint8_t { Empty, Gt, Lt, Cross };
enum class Sign : std::uint8_t { None, Plus, Minus };
enum class Series : std::uint8_t { B, D };

inline constexpr std::string_view kGrammar =
    "diagram := sign? zerotok postok*\n"
    "sign    := '+' | '-'\n"
    "zerotok := 'o' | '>' | '<' | stack | stack '/>' | stack '/<'\n"
    "stack   := 'x' | 'x^' INT      (INT >= 1)\n"
    "postok  := 'o' | 'x' | '>' | '<'\n"
    "examples: -x^2oxoox  +xoox  x^2/>oox  >xx  (trailing 'o' optional)\n";

inline bool is_core(Symbol s) { return s == Symbol::Gt || s == Symbol::Lt; }

inline char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Gt: return '>';
    case Symbol::Lt: return '<';
    case Symbol::Cross: return 'x';
    default: return 'o';
  }
}

// A weight diagram of osp(2m+t|2n).  Position 0 is split into a stack of
// crosses and at most one core symbol; positions p >= 1 live in
// tail_symbols[p-1].  Trailing empties are never stored.
struct WeightDiagram {
  int t = 0;
  int zero_crosses = 0;
  std::optional<Symbol> zero_core;
  std::vector<Symbol> tail_symbols;
  Sign sign = Sign::None;

  Symbol at(int p) const {
    if (p < 1 || p > static_cast<int>(tail_symbols.size())) return Symbol::Empty;
    return tail_symbols[p - 1];
  }

  void set(int p, Symbol s) {
    if (p < 1) throw std::out_of_range("set: position must be positive");
    if (p > static_cast<int>(tail_symbols.size())) {
      if (s == Symbol::Empty) return;
      tail_symbols.resize(p, Symbol::Empty);
    }
    tail_symbols[p - 1] = s;
    trim();
  }

  // One past the largest occupied position (at least 1).
  int width() const { return static_cast<int>(tail_symbols.size()) + 1; }

  void trim() {
    while (!tail_symbols.empty() && tail_symbols.back() == Symbol::Empty) tail_symbols.pop_back();
  }

  bool zero_empty() const { return zero_crosses == 0 && !zero_core; }

  bool empty() const { return zero_empty() && tail_symbols.empty(); }

  int count(Symbol s) const {
    int c = static_cast<int>(std::count(tail_symbols.begin(), tail_symbols.end(), s));
    if (s == Symbol::Cross) c += zero_crosses;
    if (zero_core && *zero_core == s) ++c;
    return c;
  }

  bool has_core_symbols() const { return zero_core.has_value() || count(Symbol::Gt) + count(Symbol::Lt) > 0; }

  // Core-free means no core symbols apart from the forced zero > of t=2.
  bool core_free() const {
    if (count(Symbol::Gt) + count(Symbol::Lt) == 0) return true;
    return t == 2 && zero_core == Symbol::Gt && count(Symbol::Gt) == 1 && count(Symbol::Lt) == 0;
  }

  // Positions of crosses off zero, increasing.
  std::vector<int> cross_positions() const {
    std::vector<int> out;
    for (int p = 1; p < width(); ++p)
      if (at(p) == Symbol::Cross) out.push_back(p);
    return out;
  }

  friend bool operator==(const WeightDiagram&, const WeightDiagram&) = default;
  friend auto operator<=>(const WeightDiagram& a, const WeightDiagram& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    if (auto c = a.zero_crosses <=> b.zero_crosses; c != 0) return c;
    if (auto c = a.zero_core <=> b.zero_core; c != 0) return c;
    if (auto c = a.tail_symbols <=> b.tail_symbols; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

// The empty diagram of block type t.
inline WeightDiagram empty_diagram(int t) {
  WeightDiagram d;
  d.t = t;
  return d;
}

inline WeightDiagram parse(std::string_view text, int t) {
  if (t < 0 || t > 2) throw ParseError("block type must be 0, 1 or 2");
  WeightDiagram d;
  d.t = t;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse diagram \"" + std::string(text) + "\": " + why);
  };
  if (text.empty()) fail("empty input");
  if (text[i] == '+' || text[i] == '-') {
    d.sign = text[i] == '+' ? Sign::Plus : Sign::Minus;
    ++i;
  }
  if (i >= text.size()) fail("missing zero token");
  switch (text[i]) {
    case 'o': ++i; break;
    case '>': d.zero_core = Symbol::Gt; ++i; break;
    case '<': d.zero_core = Symbol::Lt; ++i; break;
    case 'x': {
      ++i;
      d.zero_crosses = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i) fail("expected an integer after '^'");
        if (i - start > 6) fail("stack height too large");
        d.zero_crosses = std::stoi(std::string(text.substr(start, i - start)));
        if (d.zero_crosses < 1) fail("stack height must be at least 1");
      }
      if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || (text[i] != '>' && text[i] != '<')) fail("expected '>' or '<' after '/'");
        d.zero_core = text[i] == '>' ? Symbol::Gt : Symbol::Lt;
        ++i;
      }
      break;
    }
    default: fail(std::string("unexpected character '") + text[i] + "' at zero position");
  }
  for (; i < text.size(); ++i) {
    switch (text[i]) {
      case 'o': d.tail_symbols.push_back(Symbol::Empty); break;
      case 'x': d.tail_symbols.push_back(Symbol::Cross); break;
      case '>': d.tail_symbols.push_back(Symbol::Gt); break;
      case '<': d.tail_symbols.push_back(Symbol::Lt); break;
      default: fail(std::string("unexpected character '") + text[i] + "'");
    }
  }
  d.trim();
  return d;
}

inline std::string zero_token(const WeightDiagram& d) {
  if (d.zero_crosses == 0) return d.zero_core ? std::string(1, symbol_char(*d.zero_core)) : "o";
  std::string s = "x";
  if (d.zero_crosses > 1) s += "^" + std::to_string(d.zero_crosses);
  if (d.zero_core) s += std::string("/") + symbol_char(*d.zero_core);
  return s;
}

inline std::string format(const WeightDiagram& d) {
  std::string s;
  if (d.sign == Sign::Plus) s += '+';
  if (d.sign == Sign::Minus) s += '-';
  s += zero_token(d);
  for (Symbol x : d.tail_symbols) s += symbol_char(x);
  return s;
}

// Display form with the usual glyphs; never accepted by parse.
inline std::string format_unicode(const WeightDiagram& d) {
  if (d.empty() && d.sign == Sign::None) return "∅";
  std::string s;
  if (d.sign == Sign::Plus) s += '+';
  if (d.sign == Sign::Minus) s += "−";
  auto glyph = [](Symbol x) -> std::string {
    switch (x) {
      case Symbol::Gt: return ">";
      case Symbol::Lt: return "<";
      case Symbol::Cross: return "×";
      default: return "∘";
    }
  };
  if (d.zero_crosses == 0) {
    s += d.zero_core ? glyph(*d.zero_core) : glyph(Symbol::Empty);
  } else {
    s += glyph(Symbol::Cross);
    if (d.zero_crosses > 1) s += "^" + std::to_string(d.zero_crosses);
    if (d.zero_core) s += "/" + glyph(*d.zero_core);
  }
  for (Symbol x : d.tail_symbols) s += glyph(x);
  return s;
}

// A sign is required exactly when the zero position carries no core symbol
// and either holds crosses only (t=1) or is empty in a diagram with at
// least one > or x (t=0).
inline bool sign_required(const WeightDiagram& d) {
  if (d.t == 1) return d.zero_crosses > 0 && !d.zero_core;
  if (d.t == 0) return d.zero_empty() && d.count(Symbol::Gt) + d.count(Symbol::Cross) > 0;
  return false;
}

inline std::vector<std::string> validate(const WeightDiagram& d) {
  std::vector<std::string> v;
  if (d.t < 0 || d.t > 2) {
    v.push_back("block type must be 0, 1 or 2");
    return v;
  }
  if (d.zero_crosses < 0) v.push_back("negative zero stack");
  if (!d.tail_symbols.empty() && d.tail_symbols.back() == Symbol::Empty)
    v.push_back("trailing empty positions must be truncated");
  if (d.zero_core && !is_core(*d.zero_core)) v.push_back("zero core symbol must be > or <");
  switch (d.t) {
    case 0:
      if (d.zero_core) v.push_back("t=0 diagram holds a core symbol at zero");
      break;
    case 2:
      if (d.zero_core != Symbol::Gt) v.push_back("t=2 diagram must hold > at zero");
      if (d.sign != Sign::None) v.push_back("t=2 diagrams carry no sign");
      break;
    default: break;
  }
  bool need = sign_required(d);
  if (need && d.sign == Sign::None) v.push_back("sign missing");
  if (!need && d.sign != Sign::None && d.t != 2) {
    if (d.zero_crosses > 0 || d.zero_core) {
      v.push_back("sign present but zero occupied");
    } else {
      v.push_back("sign present on a diagram without > or x");
    }
  }
  return v;
}

inline bool is_valid(const WeightDiagram& d) { return validate(d).empty(); }

inline void require_valid(const WeightDiagram& d) {
  auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "invalid diagram " + format(d) + ":";
  for (const auto& s : v) msg += " " + s + ";";
  throw DomainError(msg);
}

inline WeightDiagram parse_valid(std::string_view text, int t) {
  WeightDiagram d = parse(text, t);
  require_valid(d);
  return d;
}

inline int atypicality(const WeightDiagram& d) { return d.count(Symbol::Cross); }

inline int tail_length(const WeightDiagram& d) {
  if (d.t == 1 && d.sign == Sign::Plus) return d.zero_crosses - 1;
  return d.zero_crosses;
}

inline WeightDiagram core_of(const WeightDiagram& d) {
  WeightDiagram c = d;
  c.zero_crosses = 0;
  for (auto& s : c.tail_symbols)
    if (s == Symbol::Cross) s = Symbol::Empty;
  c.trim();
  c.sign = Sign::None;
  if (d.t == 0 && sign_required(c)) c.sign = Sign::Plus;
  return c;
}

inline int block_type(const WeightDiagram& core, Series series) {
  if (series == Series::B) return 1;
  return core.zero_core == Symbol::Gt ? 2 : 0;
}

inline bool is_stable(const WeightDiagram& d) {
  int lowest_core = -1;
  if (d.zero_core && d.t == 1) lowest_core = 0;
  for (int p = 1; p < d.width() && lowest_core < 0; ++p)
    if (is_core(d.at(p))) lowest_core = p;
  if (lowest_core < 0) return true;
  auto xs = d.cross_positions();
  int highest_cross = xs.empty() ? (d.zero_crosses > 0 ? 0 : -1) : xs.back();
  if (highest_cross < 0) return true;
  if (lowest_core == 0) return highest_cross == 0;
  return highest_cross < lowest_core;
}

inline WeightDiagram sigma(const WeightDiagram& d) {
  WeightDiagram r = d;
  if (r.sign == Sign::Plus) r.sign = Sign::Minus;
  else if (r.sign == Sign::Minus) r.sign = Sign::Plus;
  return r;
}

// (-1)^(sum of cross coordinates) for t=0,1 core-free diagrams.  The t=2
// case goes through tau and lives in howl.hpp.
inline int pari_untwisted(const WeightDiagram& d) {
  int s = 0;
  for (int p : d.cross_positions()) s += p;
  return s % 2 == 0 ? 1 : -1;
}

// Algebra osp(M|N) carried by a diagram: M = 2(#> + #x) (+1 for t=1),
// N = 2(#< + #x).  For t=2 the zero > is counted.
struct Superalgebra {
  int M = 0;
  int N = 0;
};

inline Superalgebra superalgebra_of(const WeightDiagram& d) {
  int k = atypicality(d);
  int gt = d.count(Symbol::Gt);
  int lt = d.count(Symbol::Lt);
  return {2 * (gt + k) + (d.t == 1 ? 1 : 0), 2 * (lt + k)};
}

// All valid diagrams of type t with exactly k crosses, at most `cores`
// core symbols off the forced ones, every coordinate below width.
// Deterministic order.
inline std::vector<WeightDiagram> enumerate_diagrams(int t, int k, int cores, int width) {
  std::vector<WeightDiagram> out;
  if (width < 1) return out;
  std::vector<std::optional<Symbol>> zero_cores{std::nullopt};
  if (t == 1 && cores > 0) {
    zero_cores.push_back(Symbol::Gt);
    zero_cores.push_back(Symbol::Lt);
  }
  if (t == 2) zero_cores = {Symbol::Gt};
  std::vector<Symbol> row(width - 1, Symbol::Empty);
  for (auto zc : zero_cores) {
    int core_budget = cores - ((zc && t == 1) ? 1 : 0);
    for (int p = 0; p <= k; ++p) {
      // Fill positions 1..width-1 recursively.
      auto rec = [&](auto&& self, int pos, int crosses_left, int cores_left) -> void {
        if (pos == width) {
          if (crosses_left != 0) return;
          WeightDiagram d;
          d.t = t;
          d.zero_crosses = p;
          d.zero_core = zc;
          d.tail_symbols = row;
          d.trim();
          if (sign_required(d)) {
            d.sign = Sign::Plus;
            out.push_back(d);
            d.sign = Sign::Minus;
            out.push_back(d);
          } else {
            out.push_back(d);
          }
          return;
        }
        int remaining = width - pos;
        row[pos - 1] = Symbol::Empty;
        if (crosses_left < remaining) self(self, pos + 1, crosses_left, cores_left);
        if (crosses_left > 0) {
          row[pos - 1] = Symbol::Cross;
          self(self, pos + 1, crosses_left - 1, cores_left);
        }
        if (cores_left > 0 && crosses_left < remaining) {
          row[pos - 1] = Symbol::Gt;
          self(self, pos + 1, crosses_left, cores_left - 1);
          row[pos - 1] = Symbol::Lt;
          self(self, pos + 1, crosses_left, cores_left - 1);
        }
        row[pos - 1] = Symbol::Empty;
      };
      rec(rec, 1, k - p, core_budget);
    }
  }
  return out;
}

inline std::vector<WeightDiagram> enumerate_corefree(int t, int k, int width) {
  return enumerate_diagrams(t, k, 0, width);
}

}  // namespace ospds
