#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ospds/diagram.hpp"
#include "ospds/howl.hpp"

namespace ospds {

struct Arc {
  int support = 0;
  int stack_index = 0;
  std::vector<int> ends;

  int right() const { return ends.back(); }
  bool is_double() const { return ends.size() == 2; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  WeightDiagram base;
  std::vector<Arc> arcs;
};

namespace detail {

inline bool occupied(const WeightDiagram& h, int p) {
  if (p == 0) return h.zero_crosses > 0 || h.zero_core.has_value();
  return h.at(p) != Symbol::Empty;
}

}  // namespace detail

inline ArcDiagram build_arcs(const WeightDiagram& h) {
  require_valid(h);
  if (!h.core_free()) throw DomainError("build_arcs: diagram " + format(h) + " is not core-free");
  ArcDiagram A{h, {}};
  std::set<int> used;
  auto next_free = [&](int from) {
    int b = from;
    while (detail::occupied(h, b) || used.count(b)) ++b;
    used.insert(b);
    return b;
  };
  std::vector<int> supports = h.cross_positions();
  bool single_zero = h.t != 2 && h.zero_crosses > 0;
  if (single_zero) supports.insert(supports.begin(), 0);
  for (auto it = supports.rbegin(); it != supports.rend(); ++it) {
    A.arcs.push_back({*it, 0, {next_free(*it + 1)}});
  }
  for (int s = single_zero ? 1 : 0; s < h.zero_crosses; ++s) {
    int b1 = next_free(1);
    int b2 = next_free(b1 + 1);
    A.arcs.push_back({0, s, {b1, b2}});
  }
  std::sort(A.arcs.begin(), A.arcs.end());
  return A;
}

// True when x lies below y.
inline bool arc_less(const Arc& x, const Arc& y) {
  if (!y.is_double()) {
    if (x.is_double()) return false;
    return y.support < x.support && x.right() < y.right();
  }
  return x.right() < y.right();
}

inline std::vector<Arc> maximal_arcs(const ArcDiagram& A) {
  std::vector<Arc> out;
  for (const Arc& x : A.arcs) {
    bool below = std::any_of(A.arcs.begin(), A.arcs.end(), [&](const Arc& y) { return arc_less(x, y); });
    if (!below) out.push_back(x);
  }
  return out;
}

inline bool is_maximal(const ArcDiagram& A, const Arc& a) {
  auto m = maximal_arcs(A);
  return std::find(m.begin(), m.end(), a) != m.end();
}

inline WeightDiagram remove_arc(const ArcDiagram& A, const Arc& a) {
  if (!is_maximal(A, a)) throw DomainError("remove_arc: arc is not maximal");
  WeightDiagram r = A.base;
  if (a.support == 0) {
    --r.zero_crosses;
    if (r.t == 1 && r.zero_crosses == 0) r.sign = Sign::None;
  } else {
    r.set(a.support, Symbol::Empty);
  }
  if (r.t == 0) {
    if (!sign_required(r)) r.sign = Sign::None;
    else if (r.sign == Sign::None) r.sign = Sign::Plus;
  }
  return r;
}

// Free positions strictly left of the support of a.
inline int free_left(const ArcDiagram& A, const Arc& a) {
  std::set<int> ends;
  for (const Arc& x : A.arcs)
    for (int b : x.ends) ends.insert(b);
  int e = 0;
  for (int p = 0; p < a.support; ++p)
    if (!detail::occupied(A.base, p) && !ends.count(p)) ++e;
  return e;
}

namespace detail {

// Nesting depth: 1 for arcs with nothing below them.
inline std::map<Arc, int> arc_depths(const std::vector<Arc>& arcs) {
  std::map<Arc, int> depth;
  for (const Arc& a : arcs) depth[a] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Arc& y : arcs)
      for (const Arc& x : arcs)
        if (arc_less(x, y) && depth[y] < depth[x] + 1) {
          depth[y] = depth[x] + 1;
          changed = true;
        }
  }
  return depth;
}

inline std::string render(const WeightDiagram& base, const std::vector<Arc>& arcs, const std::vector<bool>& dots) {
  int width = base.width();
  for (const Arc& a : arcs) width = std::max(width, a.right() + 1);
  const int cell = 4;
  auto col = [&](int p) { return p * cell + 1; };
  int line_len = width * cell + 1;
  auto depth = arc_depths(arcs);
  int levels = 0;
  for (auto& [a, d] : depth) levels = std::max(levels, d);
  std::vector<std::string> rows(levels, std::string(line_len, ' '));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    int top = levels - depth[a];
    int l = col(a.support), r = col(a.right());
    rows[top][l] = '.';
    rows[top][r] = '.';
    for (int c = l + 1; c < r; ++c) rows[top][c] = '-';
    if (a.is_double()) rows[top][col(a.ends[0])] = '.';
    if (i < dots.size() && dots[i]) rows[top][(l + r) / 2] = '*';
    std::vector<int> legs{a.support};
    for (int b : a.ends) legs.push_back(b);
    for (int p : legs)
      for (int rr = top + 1; rr < levels; ++rr)
        if (rows[rr][col(p)] == ' ') rows[rr][col(p)] = '|';
  }
  std::string sym(line_len, ' ');
  std::string coord(line_len, ' ');
  std::string zero = zero_token(base);
  if (base.zero_crosses == 0 && !base.zero_core) zero = "o";
  for (int p = 0; p < width; ++p) {
    std::string s = p == 0 ? zero : std::string(1, symbol_char(base.at(p)));
    for (std::size_t j = 0; j < s.size() && col(p) + j < sym.size(); ++j) sym[col(p) + j] = s[j];
    std::string c = std::to_string(p);
    for (std::size_t j = 0; j < c.size() && col(p) + j < coord.size(); ++j) coord[col(p) + j] = c[j];
  }
  std::ostringstream os;
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  if (base.sign != Sign::None) os << "sign " << (base.sign == Sign::Plus ? '+' : '-') << '\n';
  for (auto& r : rows) os << rstrip(r) << '\n';
  os << rstrip(sym) << '\n' << rstrip(coord) << '\n';
  return os.str();
}

}  // namespace detail

inline std::string render_ascii(const ArcDiagram& A) { return detail::render(A.base, A.arcs, {}); }

struct DottedArcDiagram {
  WeightDiagram diagram;
  std::vector<Arc> arcs;
  std::vector<bool> dotted;
  int l = 0;
};

// Dotted cup diagram of the tailless weight attached to d.  Even
// orthogonal diagrams are read as odd ones with a + sign.
inline DottedArcDiagram es_dotted(const WeightDiagram& d, Series series) {
  WeightDiagram h = howl(d);
  if (series == Series::D) {
    if (h.t == 1) throw DomainError("es: series D needs a t=0 or t=2 diagram");
    WeightDiagram b;
    b.t = 1;
    b.zero_crosses = h.zero_crosses;
    for (int p = 1; p < h.width(); ++p) b.set(p, h.at(p));
    if (b.zero_crosses > 0) b.sign = Sign::Plus;
    h = b;
  } else if (h.t != 1) {
    throw DomainError("es: series B needs a t=1 diagram");
  }
  DottedArcDiagram out;
  out.l = tail_length(h);
  WeightDiagram bar = h;
  bar.zero_crosses -= out.l;
  if (bar.zero_crosses == 0) bar.sign = Sign::None;
  ArcDiagram A = build_arcs(bar);
  std::set<int> ends;
  for (const Arc& a : A.arcs)
    for (int b : a.ends) ends.insert(b);
  std::vector<int> free;
  for (int p = 0; static_cast<int>(free.size()) < 2 * out.l; ++p)
    if (!detail::occupied(bar, p) && !ends.count(p)) free.push_back(p);
  std::set<int> coloured;
  for (int i = 0; i < out.l; ++i) {
    int p = free[2 * i];
    coloured.insert(p);
    if (p == 0) {
      bar.zero_crosses = 1;
      bar.sign = Sign::Plus;
    } else {
      bar.set(p, Symbol::Cross);
    }
  }
  ArcDiagram C = build_arcs(bar);
  out.diagram = bar;
  out.arcs = C.arcs;
  for (const Arc& a : C.arcs) out.dotted.push_back(coloured.count(a.support) > 0);
  return out;
}

inline std::string render_dotted(const DottedArcDiagram& D) { return detail::render(D.diagram, D.arcs, D.dotted); }

}  // namespace ospds
