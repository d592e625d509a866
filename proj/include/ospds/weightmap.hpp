#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ospds/diagram.hpp"

namespace ospds {

// Exact half-integer, stored doubled.
struct HalfInt {
  int twice = 0;

  static HalfInt from_int(int v) { return {2 * v}; }
  bool is_integer() const { return twice % 2 == 0; }
  HalfInt abs() const { return {std::abs(twice)}; }
  std::string str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }

  friend bool operator==(HalfInt, HalfInt) = default;
  friend auto operator<=>(HalfInt, HalfInt) = default;
};

inline HalfInt parse_halfint(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  auto slash = t.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      int v = std::stoi(t, &used);
      if (used != t.size()) throw ParseError("");
      return HalfInt::from_int(v);
    }
    if (t.substr(slash + 1) != "2") throw ParseError("");
    std::string num = t.substr(0, slash);
    int v = std::stoi(num, &used);
    if (used != num.size()) throw ParseError("");
    return {v};
  } catch (const std::exception&) {
    throw ParseError("cannot parse coefficient \"" + s + "\" (expected an integer or p/2)");
  }
}

// lambda+rho of a dominant weight: a are the epsilon coefficients, b the
// delta coefficients.
struct DominantWeight {
  Series series = Series::D;
  int m = 0;
  int n = 0;
  std::vector<HalfInt> a;
  std::vector<HalfInt> b;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
};

inline std::string format_weight(const DominantWeight& w) {
  std::ostringstream os;
  os << (w.series == Series::B ? 'B' : 'D') << ' ' << w.m << ' ' << w.n << " / ";
  for (std::size_t i = 0; i < w.a.size(); ++i) os << (i ? "," : "") << w.a[i].str();
  os << " / ";
  for (std::size_t i = 0; i < w.b.size(); ++i) os << (i ? "," : "") << w.b[i].str();
  return os.str();
}

// "B m n / a1,...,am / b1,...,bn"
inline DominantWeight parse_weight(const std::string& text) {
  // A slash between a digit and a lone 2 belongs to a p/2 literal.
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool fraction = c == '/' && i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1])) && i + 1 < text.size() &&
                    text[i + 1] == '2' && (i + 2 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 2])));
    if (c == '/' && !fraction) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw ParseError("weight must look like \"B m n / a1,...,am / b1,...,bn\"");
  DominantWeight w;
  std::istringstream head(parts[0]);
  std::string series;
  if (!(head >> series >> w.m >> w.n) || (series != "B" && series != "D"))
    throw ParseError("weight header must be \"B m n\" or \"D m n\"");
  w.series = series == "B" ? Series::B : Series::D;
  auto split = [](const std::string& s) {
    std::vector<HalfInt> out;
    if (s.find_first_not_of(' ') == std::string::npos) return out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(parse_halfint(item));
    return out;
  };
  w.a = split(parts[1]);
  w.b = split(parts[2]);
  if (static_cast<int>(w.a.size()) != w.m || static_cast<int>(w.b.size()) != w.n)
    throw ParseError("weight has the wrong number of coefficients");
  return w;
}

namespace detail {

// Position on the number line: |c| for D, |c|-1/2 for B.
inline int coordinate(HalfInt c, Series s) {
  return s == Series::D ? std::abs(c.twice) / 2 : (std::abs(c.twice) - 1) / 2;
}

inline void check_dominant(const DominantWeight& w) {
  auto fail = [](const std::string& why) { throw DomainError("weight is not dominant: " + why); };
  if (static_cast<int>(w.a.size()) != w.m || static_cast<int>(w.b.size()) != w.n) fail("wrong number of coefficients");
  if (w.series == Series::D) {
    for (auto c : w.a)
      if (!c.is_integer()) fail("coefficients must be integers");
    for (auto c : w.b)
      if (!c.is_integer() || c.twice < 0) fail("b coefficients must be non-negative integers");
    for (int i = 0; i + 1 < w.m; ++i)
      if (w.a[i].twice < 0) fail("only a_m may be negative");
    for (int i = 0; i + 1 < w.m; ++i) {
      HalfInt next = i + 2 == w.m ? w.a[i + 1].abs() : w.a[i + 1];
      if (w.a[i] < next || (w.a[i] == next && w.a[i].twice != 0)) fail("a must decrease strictly above 0");
    }
    for (int j = 0; j + 1 < w.n; ++j)
      if (w.b[j] < w.b[j + 1] || (w.b[j] == w.b[j + 1] && w.b[j].twice != 0)) fail("b must decrease strictly above 0");
  } else {
    for (auto c : w.a)
      if (c.is_integer() || c.twice < -1) fail("a_i + 1/2 must be a non-negative integer");
    for (auto c : w.b)
      if (c.is_integer() || c.twice < 1) fail("b_j - 1/2 must be a non-negative integer");
    for (int i = 0; i + 1 < w.m; ++i)
      if (w.a[i] < w.a[i + 1] || (w.a[i] == w.a[i + 1] && w.a[i].twice != -1)) fail("a must decrease strictly above -1/2");
    for (int j = 0; j + 1 < w.n; ++j)
      if (w.b[j] < w.b[j + 1] || (w.b[j] == w.b[j + 1] && w.b[j].twice != 1)) fail("b must decrease strictly above 1/2");
  }
}

}  // namespace detail

inline WeightDiagram weight_to_diagram(const DominantWeight& w) {
  detail::check_dominant(w);
  std::map<int, int> gt, lt;
  for (auto c : w.a) ++gt[detail::coordinate(c, w.series)];
  for (auto c : w.b) ++lt[detail::coordinate(c, w.series)];
  WeightDiagram d;
  int x0 = std::min(gt[0], lt[0]);
  int g0 = gt[0] - x0, l0 = lt[0] - x0;
  if (g0 > 1 || l0 > 1) throw DomainError("weight is not dominant: too many symbols at zero");
  d.zero_crosses = x0;
  if (g0) d.zero_core = Symbol::Gt;
  if (l0) d.zero_core = Symbol::Lt;
  int top = 0;
  for (auto& [p, c] : gt) top = std::max(top, p);
  for (auto& [p, c] : lt) top = std::max(top, p);
  for (int p = 1; p <= top; ++p) {
    int g = gt.count(p) ? gt[p] : 0;
    int l = lt.count(p) ? lt[p] : 0;
    if (g > 1 || l > 1) throw DomainError("weight is not dominant: repeated coordinate");
    if (g && l) d.set(p, Symbol::Cross);
    else if (g) d.set(p, Symbol::Gt);
    else if (l) d.set(p, Symbol::Lt);
  }
  if (w.series == Series::D) {
    if (d.zero_core == Symbol::Lt) throw DomainError("weight is not dominant: < at zero for an even orthogonal part");
    d.t = d.zero_core ? 2 : 0;
    if (sign_required(d)) d.sign = w.a.back().twice < 0 ? Sign::Minus : Sign::Plus;
  } else {
    d.t = 1;
    int plus_half = static_cast<int>(std::count(w.a.begin(), w.a.end(), HalfInt{1}));
    if (d.zero_core == Symbol::Gt && plus_half != 1) throw DomainError("weight is not dominant: lone > at zero needs a_i = 1/2");
    if (d.zero_core == Symbol::Lt && plus_half != 0) throw DomainError("weight is not dominant: < at zero excludes a_i = 1/2");
    if (sign_required(d)) d.sign = plus_half ? Sign::Plus : Sign::Minus;
  }
  require_valid(d);
  return d;
}

// m counts all epsilon coefficients (the zero > of t=2 included).
inline DominantWeight diagram_to_weight(const WeightDiagram& d, int m, int n) {
  require_valid(d);
  int k = atypicality(d);
  if (d.count(Symbol::Gt) != m - k || d.count(Symbol::Lt) != n - k)
    throw DomainError("diagram " + format(d) + " does not match m=" + std::to_string(m) + ", n=" + std::to_string(n));
  DominantWeight w;
  w.series = d.t == 1 ? Series::B : Series::D;
  w.m = m;
  w.n = n;
  auto value = [&](int p) { return d.t == 1 ? HalfInt{2 * p + 1} : HalfInt::from_int(p); };
  for (int p = 1; p < d.width(); ++p) {
    Symbol s = d.at(p);
    if (s == Symbol::Gt || s == Symbol::Cross) w.a.push_back(value(p));
    if (s == Symbol::Lt || s == Symbol::Cross) w.b.push_back(value(p));
  }
  for (int i = 0; i < d.zero_crosses; ++i) w.b.push_back(value(0));
  if (d.zero_core == Symbol::Lt) w.b.push_back(value(0));
  if (d.t == 1) {
    bool plus = d.zero_core == Symbol::Gt || d.sign == Sign::Plus;
    int minus = d.zero_crosses - (d.sign == Sign::Plus ? 1 : 0);
    if (plus) w.a.push_back(HalfInt{1});
    for (int i = 0; i < minus; ++i) w.a.push_back(HalfInt{-1});
  } else {
    for (int i = 0; i < d.zero_crosses; ++i) w.a.push_back(HalfInt{0});
    if (d.zero_core == Symbol::Gt) w.a.push_back(HalfInt{0});
  }
  std::sort(w.a.begin(), w.a.end(), std::greater<>());
  std::sort(w.b.begin(), w.b.end(), std::greater<>());
  if (d.t == 0 && d.sign == Sign::Minus) w.a.back().twice = -w.a.back().twice;
  return w;
}

}  // namespace ospds
