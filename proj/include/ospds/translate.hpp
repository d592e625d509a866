#pragma once

#include <utility>
#include <vector>

#include "ospds/diagram.hpp"

namespace ospds {

namespace detail {

// Type-1 moves between a core symbol at zero and position 1.
inline WeightDiagram trans_zero(const WeightDiagram& d) {
  WeightDiagram r = d;
  Symbol one = d.at(1);
  if (d.zero_core && !is_core(one)) {
    Symbol c = *d.zero_core;
    r.zero_core.reset();
    r.zero_crosses = d.zero_crosses + (one == Symbol::Cross ? 1 : 0);
    r.set(1, c);
    if (one == Symbol::Cross) r.sign = Sign::Plus;
    else r.sign = d.zero_crosses > 0 ? Sign::Minus : Sign::None;
    return r;
  }
  if (!d.zero_core && is_core(one)) {
    r.zero_core = one;
    r.set(1, Symbol::Empty);
    r.sign = Sign::None;
    if (d.sign == Sign::Plus) {
      r.zero_crosses = d.zero_crosses - 1;
      r.set(1, Symbol::Cross);
    }
    return r;
  }
  throw DomainError("trans_swap: no translation move at position 0 for " + format(d));
}

}  // namespace detail

// Action of a translation functor exchanging the core contents of
// positions a and a+1.
inline WeightDiagram trans_swap(const WeightDiagram& d, int a) {
  require_valid(d);
  if (a < 0) throw DomainError("trans_swap: negative position");
  if (a == 0) {
    if (d.t != 1) throw DomainError("trans_swap: position 0 moves exist only for t=1");
    return detail::trans_zero(d);
  }
  Symbol x = d.at(a);
  Symbol y = d.at(a + 1);
  if (is_core(x) == is_core(y))
    throw DomainError("trans_swap: positions " + std::to_string(a) + "," + std::to_string(a + 1) +
                      " need exactly one core symbol");
  WeightDiagram r = d;
  r.set(a, y);
  r.set(a + 1, x);
  return r;
}

struct Stabilized {
  WeightDiagram diagram;
  std::vector<int> moves;
};

inline Stabilized stabilize(const WeightDiagram& d) {
  require_valid(d);
  Stabilized out{d, {}};
  WeightDiagram& cur = out.diagram;
  while (!is_stable(cur)) {
    auto xs = cur.cross_positions();
    int top = xs.back();
    int pick = -1;
    for (int p = top - 1; p >= 1 && pick < 0; --p)
      if (is_core(cur.at(p))) pick = p;
    if (pick < 0 && cur.t == 1 && cur.zero_core) pick = 0;
    if (pick < 0) throw DomainError("stabilize: no admissible move for " + format(cur));
    cur = trans_swap(cur, pick);
    out.moves.push_back(pick);
  }
  return out;
}

inline WeightDiagram shrink(const WeightDiagram& d, int u) {
  if (u < 1) throw DomainError("shrink: position must be positive");
  if (d.at(u) != Symbol::Cross || d.at(u + 1) != Symbol::Empty)
    throw DomainError("shrink: positions " + std::to_string(u) + "," + std::to_string(u + 1) + " of " + format(d) +
                      " are not x,o");
  WeightDiagram r = d;
  r.tail_symbols.erase(r.tail_symbols.begin() + (u - 1), r.tail_symbols.begin() + std::min<int>(u + 1, d.width() - 1));
  r.trim();
  if (r.t == 0 && r.sign == Sign::None && sign_required(r)) r.sign = Sign::Plus;
  if (r.t == 0 && !sign_required(r)) r.sign = Sign::None;
  return r;
}

inline WeightDiagram phi(const WeightDiagram& d, int u) {
  if (u < 1) throw DomainError("phi: position must be positive");
  if (d.at(u) != Symbol::Cross || d.at(u + 1) != Symbol::Empty)
    throw DomainError("phi: positions " + std::to_string(u) + "," + std::to_string(u + 1) + " of " + format(d) +
                      " are not x,o");
  WeightDiagram r = d;
  r.set(u, Symbol::Gt);
  r.set(u + 1, Symbol::Lt);
  return r;
}

inline WeightDiagram switch_functor(const WeightDiagram& d) {
  require_valid(d);
  if (d.t != 1 || !d.core_free()) throw DomainError("switch: expects a core-free t=1 diagram");
  return sigma(d);
}

}  // namespace ospds
