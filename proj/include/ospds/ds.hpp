#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ospds/arcs.hpp"
#include "ospds/diagram.hpp"
#include "ospds/howl.hpp"

namespace ospds {

// Jordan-Hoelder multiplicities of L and of its parity shift.
struct GradedMult {
  long long d0 = 0;
  long long d1 = 0;

  bool zero() const { return d0 == 0 && d1 == 0; }
  std::string str() const { return "(" + std::to_string(d0) + "|" + std::to_string(d1) + ")"; }

  friend bool operator==(const GradedMult&, const GradedMult&) = default;
  friend GradedMult operator+(GradedMult a, GradedMult b) { return {a.d0 + b.d0, a.d1 + b.d1}; }
};

inline GradedMult gm_mul(GradedMult x, GradedMult y) {
  return {x.d0 * y.d0 + x.d1 * y.d1, x.d0 * y.d1 + x.d1 * y.d0};
}

struct Decomposition {
  int t = 0;
  std::map<WeightDiagram, GradedMult> components;

  GradedMult at(const WeightDiagram& d) const {
    auto it = components.find(d);
    return it == components.end() ? GradedMult{} : it->second;
  }
  void add(const WeightDiagram& d, GradedMult g) {
    if (g.zero()) return;
    components[d] = components[d] + g;
  }
};

// Multiplicity attached to a removed maximal arc with e free positions on
// its left.  `doubled` selects the rule (1|0), (2|0), (0|2).
inline GradedMult arc_multiplicity(int e, bool doubled) {
  if (!doubled) return e % 2 == 0 ? GradedMult{1, 0} : GradedMult{0, 1};
  if (e == 0) return {1, 0};
  return e % 2 == 0 ? GradedMult{2, 0} : GradedMult{0, 2};
}

inline Decomposition ds1(const WeightDiagram& lambda) {
  require_valid(lambda);
  Decomposition D{lambda.t, {}};
  if (atypicality(lambda) == 0) return D;
  WeightDiagram core = core_of(lambda);
  WeightDiagram h = howl(lambda);
  ArcDiagram A = build_arcs(h);
  for (const Arc& a : maximal_arcs(A)) {
    WeightDiagram reduced = remove_arc(A, a);
    int e = free_left(A, a);
    // For t=0 the simple rule only applies when the result keeps an empty
    // zero position; a surviving zero stack behaves as in the odd case.
    bool doubled = lambda.t != 0 || reduced.zero_crosses > 0;
    GradedMult g = arc_multiplicity(e, doubled);
    std::vector<WeightDiagram> targets{reduced};
    if (lambda.t == 0 && reduced.sign != Sign::None) targets.push_back(sigma(reduced));
    for (const auto& target : targets)
      for (const auto& nu : unhowl(core, target)) D.add(nu, g);
  }
  return D;
}

inline Decomposition dsr(const WeightDiagram& lambda, int r) {
  require_valid(lambda);
  Decomposition D{lambda.t, {{lambda, {1, 0}}}};
  for (int step = 0; step < r; ++step) {
    Decomposition next{lambda.t, {}};
    for (const auto& [nu, g] : D.components) {
      Decomposition E = ds1(nu);
      for (const auto& [mu, h] : E.components) next.add(mu, gm_mul(g, h));
    }
    D = std::move(next);
  }
  return D;
}

// Every component is pure and sits in the parity dictated by pari.
inline bool check_purity(const Decomposition& D, const WeightDiagram& lambda) {
  int p = pari(lambda);
  for (const auto& [nu, g] : D.components) {
    if (g.d0 != 0 && g.d1 != 0) return false;
    int q = pari(nu);
    if (g.d0 != 0 && q != p) return false;
    if (g.d1 != 0 && q != -p) return false;
  }
  return true;
}

enum class OspLabel { Plus, Minus };

struct OspComponent {
  WeightDiagram diagram;
  std::optional<OspLabel> label;
  GradedMult mult;
};

// DS_1 for the groups OSp(M|2n).  For even M the simple OSp-modules are
// labelled by unsigned diagrams; for odd M by a diagram and a label that
// DS_1 preserves.
inline std::vector<OspComponent> ds_osp(const WeightDiagram& lambda, std::optional<OspLabel> label = std::nullopt) {
  require_valid(lambda);
  std::vector<OspComponent> out;
  Decomposition D = ds1(lambda);
  if (lambda.t == 1) {
    if (!label) throw DomainError("ds_osp: odd orthogonal case needs a + or - label");
    for (const auto& [nu, g] : D.components) out.push_back({nu, label, g});
    return out;
  }
  if (label) throw DomainError("ds_osp: even orthogonal case takes no label");
  bool fixed = sigma(lambda) == lambda;
  std::map<WeightDiagram, GradedMult> merged;
  for (const auto& [nu, g] : D.components) {
    WeightDiagram key = nu;
    key.sign = Sign::None;
    if (merged.count(key)) continue;
    merged[key] = fixed ? g : GradedMult{2 * g.d0, 2 * g.d1};
  }
  for (const auto& [nu, g] : merged) out.push_back({nu, std::nullopt, g});
  return out;
}

}  // namespace ospds
