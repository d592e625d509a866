#pragma once

#include <string>
#include <vector>

#include "ospds/diagram.hpp"
#include "ospds/ds.hpp"
#include "ospds/howl.hpp"
#include "ospds/translate.hpp"

namespace ospds {

namespace detail {

// Number of empty positions between zero and the first cross off zero,
// or -1 when no cross follows.
inline int gap_after_zero(const WeightDiagram& d) {
  auto xs = d.cross_positions();
  return xs.empty() ? -1 : xs.front() - 1;
}

inline bool gap_at_least(int j, int n) { return j < 0 || j >= n; }

// Delete positions 1..count and shift the rest down.
inline WeightDiagram drop_front(WeightDiagram d, int count) {
  int n = std::min<int>(count, static_cast<int>(d.tail_symbols.size()));
  d.tail_symbols.erase(d.tail_symbols.begin(), d.tail_symbols.begin() + n);
  d.trim();
  return d;
}

class OracleRun {
 public:
  explicit OracleRun(std::vector<std::string>* trace) : trace_(trace) {}

  void note(const std::string& rule, const WeightDiagram& f, const WeightDiagram& g) {
    if (trace_) trace_->push_back(rule + ": " + format(f) + " / " + format(g));
  }
  void note(const std::string& rule) {
    if (trace_) trace_->push_back(rule);
  }
  GradedMult zero(const std::string& why) {
    note("zero: " + why);
    return {};
  }

  // Atypicality-one sources against the empty target.
  GradedMult base(const WeightDiagram& f) {
    if (f.t == 0) {
      int j = f.zero_crosses > 0 ? 0 : f.cross_positions().front();
      note("base osp(2|2): cross at " + std::to_string(j), f, WeightDiagram{});
      return j % 2 == 0 ? GradedMult{1, 0} : GradedMult{0, 1};
    }
    if (f.zero_crosses > 0) {
      note("base osp(3|2): signed cross at zero", f, empty_diagram(1));
      return {1, 0};
    }
    int p = f.cross_positions().front();
    note("base osp(3|2): cross at " + std::to_string(p), f, empty_diagram(1));
    return p % 2 == 0 ? GradedMult{2, 0} : GradedMult{0, 2};
  }

  GradedMult odd(WeightDiagram f, WeightDiagram g) {
    int i = g.zero_crosses;
    if (i == 0) return base(f);
    if (g.sign == Sign::Plus) {
      f = sigma(f);
      g = sigma(g);
      note("switch signs", f, g);
    }
    int p = f.zero_crosses;
    if (f.sign != Sign::Minus || p < i) return zero("source is not -x^p with p >= " + std::to_string(i));
    int j = gap_after_zero(f);
    WeightDiagram r;
    if (j == 2 * i - 1) {
      r = drop_front(f, 2 * i);
      r.zero_crosses = p - i + 1;
      note("zero stack absorbs the cross after 2i-1 empties", r, empty_diagram(1));
    } else if (gap_at_least(j, 2 * i)) {
      r = drop_front(f, 2 * i);
      r.zero_crosses = p - i;
      if (r.zero_crosses == 0) r.sign = Sign::None;
      note("zero stack drops i crosses and 2i empties", r, empty_diagram(1));
    } else {
      return zero("gap " + std::to_string(j) + " too short for i=" + std::to_string(i));
    }
    return base(r);
  }

  GradedMult even2(WeightDiagram f, WeightDiagram g) {
    int i = g.zero_crosses;
    if (i > 0) {
      int p = f.zero_crosses;
      int j = gap_after_zero(f);
      if (p < i || !gap_at_least(j, 2 * i)) return zero("stack/gap pattern does not match for i=" + std::to_string(i));
      f = drop_front(f, 2 * i);
      f.zero_crosses = p - i;
      g.zero_crosses = 0;
      note("zero stack drops i crosses and 2i empties", f, g);
    }
    // Target is the bare >.
    WeightDiagram h;
    h.t = 0;
    h.zero_crosses = f.zero_crosses + (f.at(1) == Symbol::Cross ? 1 : 0);
    h.tail_symbols = drop_front(f, 1).tail_symbols;
    if (!sign_required(h)) {
      note("remove the zero >", h, WeightDiagram{});
      return base(h);
    }
    h.sign = Sign::Plus;
    note("remove the zero >, both signs", h, WeightDiagram{});
    GradedMult a = base(h);
    GradedMult b = base(sigma(h));
    return a + b;
  }

  GradedMult even0(WeightDiagram f, WeightDiagram g) {
    int i = g.zero_crosses;
    if (i == 0) return base(f);
    if (f.zero_crosses == 0 || f.at(1) != Symbol::Empty) return zero("source is not x^p o f");
    WeightDiagram f2;
    f2.t = 2;
    f2.zero_core = Symbol::Gt;
    f2.zero_crosses = f.zero_crosses - 1;
    f2.tail_symbols = drop_front(f, 1).tail_symbols;
    WeightDiagram g2;
    g2.t = 2;
    g2.zero_core = Symbol::Gt;
    g2.zero_crosses = i - 1;
    note("pass to osp(2m+2|2n)", f2, g2);
    return even2(f2, g2);
  }

  GradedMult run(const WeightDiagram& lambda, const WeightDiagram& nu) {
    if (core_of(lambda) != core_of(nu)) return zero("different cores");
    if (atypicality(lambda) != atypicality(nu) + 1) return zero("atypicality gap is not 1");
    WeightDiagram f = howl(lambda);
    WeightDiagram g = howl(nu);
    note("howl", f, g);
    for (auto xs = g.cross_positions(); !xs.empty(); xs = g.cross_positions()) {
      int u = xs.back();
      if (f.at(u) != Symbol::Cross || f.at(u + 1) != Symbol::Empty)
        return zero("source lacks x,o at " + std::to_string(u) + "," + std::to_string(u + 1));
      f = shrink(f, u);
      g = shrink(g, u);
      note("shrink at " + std::to_string(u), f, g);
    }
    switch (f.t) {
      case 0: return even0(f, g);
      case 1: return odd(f, g);
      default: return even2(f, g);
    }
  }

 private:
  std::vector<std::string>* trace_;
};

}  // namespace detail

// [DS_1(L(lambda)) : L(nu)] computed by the translation-functor recursion.
inline GradedMult oracle_mult1(const WeightDiagram& lambda, const WeightDiagram& nu,
                               std::vector<std::string>* trace = nullptr) {
  require_valid(lambda);
  require_valid(nu);
  if (lambda.t != nu.t) throw DomainError("oracle: diagrams have different block types");
  detail::OracleRun run(trace);
  GradedMult g = run.run(lambda, nu);
  run.note("result " + g.str());
  return g;
}

}  // namespace ospds
