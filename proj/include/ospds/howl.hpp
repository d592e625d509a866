#pragma once

#include <vector>

#include "ospds/diagram.hpp"

namespace ospds {

namespace detail {

// Non-core positions of d in increasing order, up to the first `count`
// of them.  Position 0 counts only when it holds no core symbol.
inline std::vector<int> free_slots(const WeightDiagram& d, int count) {
  std::vector<int> out;
  int p = d.zero_core ? 1 : 0;
  while (static_cast<int>(out.size()) < count) {
    if (p == 0 || !is_core(d.at(p))) out.push_back(p);
    ++p;
  }
  return out;
}

}  // namespace detail

inline WeightDiagram howl(const WeightDiagram& d) {
  require_valid(d);
  WeightDiagram h;
  h.t = d.t;
  if (d.t == 2) h.zero_core = Symbol::Gt;
  h.zero_crosses = d.zero_crosses;
  int slots = (d.zero_core ? 0 : 1);
  for (int p = 1; p < d.width(); ++p) {
    Symbol s = d.at(p);
    if (s == Symbol::Cross) {
      int target = d.t == 2 ? slots + 1 : slots;
      if (target == 0) ++h.zero_crosses;
      else h.set(target, Symbol::Cross);
    }
    if (!is_core(s)) ++slots;
  }
  if (d.t == 1 && h.zero_crosses > 0) {
    h.sign = tail_length(d) == h.zero_crosses ? Sign::Minus : Sign::Plus;
  } else if (d.t == 0 && sign_required(h)) {
    h.sign = d.sign;
  }
  return h;
}

// Inverse of howl inside the block of `core`.  Returns both signed lifts
// when h is empty and the lift needs a sign (t=0).
inline std::vector<WeightDiagram> unhowl(const WeightDiagram& core, const WeightDiagram& h) {
  require_valid(core);
  require_valid(h);
  if (core.t != h.t) throw DomainError("unhowl: core and diagram have different block types");
  if (atypicality(core) != 0) throw DomainError("unhowl: first argument is not a core diagram");
  if (!h.core_free()) throw DomainError("unhowl: second argument is not core-free");
  WeightDiagram d = core;
  d.sign = Sign::None;
  auto xs = h.cross_positions();
  int max_slot = xs.empty() ? 0 : xs.back();
  auto slots = detail::free_slots(core, max_slot + 2);
  if (core.t == 2) {
    d.zero_crosses = h.zero_crosses;
    for (int p : xs) d.set(slots[p - 1], Symbol::Cross);
    return {d};
  }
  int zero = h.zero_crosses;
  if (core.zero_core) {
    // t=1 with a core symbol at zero: slot s lands on slots[s].
    for (int p : xs) d.set(slots[p], Symbol::Cross);
    if (zero > 0 && h.sign == Sign::Plus) {
      d.set(slots[0], Symbol::Cross);
      --zero;
    }
    d.zero_crosses = zero;
    return {d};
  }
  d.zero_crosses = zero;
  for (int p : xs) d.set(slots[p], Symbol::Cross);
  if (sign_required(d)) {
    if (h.sign != Sign::None) {
      d.sign = h.sign;
    } else {
      WeightDiagram other = d;
      d.sign = Sign::Plus;
      other.sign = Sign::Minus;
      return {d, other};
    }
  }
  return {d};
}

inline WeightDiagram tau(const WeightDiagram& h) {
  require_valid(h);
  if (h.t != 2 || !h.core_free()) throw DomainError("tau: expects a core-free t=2 diagram");
  WeightDiagram r;
  r.t = 1;
  int p = h.zero_crosses;
  bool cross_at_one = h.at(1) == Symbol::Cross;
  for (int q = 2; q < h.width(); ++q) r.set(q - 1, h.at(q));
  if (cross_at_one) {
    r.zero_crosses = p + 1;
    r.sign = Sign::Plus;
  } else {
    r.zero_crosses = p;
    r.sign = p > 0 ? Sign::Minus : Sign::None;
  }
  return r;
}

inline WeightDiagram tau_inv(const WeightDiagram& h) {
  require_valid(h);
  if (h.t != 1 || !h.core_free()) throw DomainError("tau_inv: expects a core-free t=1 diagram");
  WeightDiagram r;
  r.t = 2;
  r.zero_core = Symbol::Gt;
  for (int q = 1; q < h.width(); ++q) r.set(q + 1, h.at(q));
  if (h.sign == Sign::Plus) {
    r.zero_crosses = h.zero_crosses - 1;
    r.set(1, Symbol::Cross);
  } else {
    r.zero_crosses = h.zero_crosses;
  }
  return r;
}

// Parity label of a weight: (-1)^||howl||, through tau for t=2.
inline int pari(const WeightDiagram& d) {
  WeightDiagram h = d.core_free() ? d : howl(d);
  if (h.t == 2) h = tau(h);
  return pari_untwisted(h);
}

}  // namespace ospds
