#pragma once

#include <numeric>
#include <vector>

#include "ospds/diagram.hpp"
#include "ospds/ds.hpp"
#include "ospds/weightmap.hpp"

namespace ospds {

namespace detail {

// Exact running fraction num/den with both kept reduced.
struct Fraction {
  __int128 num = 1;
  __int128 den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  }
  void mul(long long p, long long q) {
    __int128 g0 = gcd(p, q);
    if (g0 > 1) {
      p /= static_cast<long long>(g0);
      q /= static_cast<long long>(g0);
    }
    __int128 g1 = gcd(p, den), g2 = gcd(num, q);
    num = (num / g2) * (p / g1);
    den = (den / g1) * (q / g2);
    if (den < 0) {
      den = -den;
      num = -num;
    }
  }
};

// Dimension of the so_N module whose highest weight plus rho is l
// (entries doubled).
inline long long weyl_dim_from_shifted(int N, const std::vector<int>& l2) {
  int r = N / 2;
  bool odd = N % 2 == 1;
  std::vector<int> rho2(r);
  for (int i = 0; i < r; ++i) rho2[i] = odd ? 2 * (r - i) - 1 : 2 * (r - i - 1);
  Fraction f;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      f.mul(l2[i] - l2[j], rho2[i] - rho2[j]);
      f.mul(l2[i] + l2[j], rho2[i] + rho2[j]);
    }
    if (odd) f.mul(l2[i], rho2[i]);
  }
  if (f.den != 1) throw DomainError("weyl_dim_so: non-integral result");
  return static_cast<long long>(f.num);
}

}  // namespace detail

// Weyl dimension formula for so_N, highest weight given in the standard
// epsilon basis.
inline long long weyl_dim_so(int N, const std::vector<HalfInt>& hw) {
  int r = N / 2;
  if (N < 0 || static_cast<int>(hw.size()) != r) throw DomainError("weyl_dim_so: expected " + std::to_string(r) + " coefficients");
  bool odd = N % 2 == 1;
  for (int i = 0; i < r; ++i) {
    if (hw[i].is_integer() != hw[0].is_integer()) throw DomainError("weyl_dim_so: mixed integral and half-integral entries");
  }
  std::vector<int> l2(r);
  for (int i = 0; i < r; ++i) l2[i] = hw[i].twice + (odd ? 2 * (r - i) - 1 : 2 * (r - i - 1));
  for (int i = 0; i + 1 < r; ++i) {
    int next = (!odd && i + 2 == r) ? std::abs(l2[i + 1]) : l2[i + 1];
    if (l2[i] <= next) throw DomainError("weyl_dim_so: weight is not dominant");
  }
  if (odd && r > 0 && l2[r - 1] <= 0) throw DomainError("weyl_dim_so: weight is not dominant");
  return detail::weyl_dim_from_shifted(N, l2);
}

// Superdimension of L(lambda) over osp(2m+1|2n) (t=1) or osp(2m|2n)
// (t=0,2), where m counts every epsilon coefficient.
inline long long superdimension(const WeightDiagram& lambda, int m, int n) {
  require_valid(lambda);
  int k = atypicality(lambda);
  if (lambda.count(Symbol::Gt) != m - k || lambda.count(Symbol::Lt) != n - k)
    throw DomainError("diagram " + format(lambda) + " does not match m=" + std::to_string(m) + ", n=" + std::to_string(n));
  if (n > k) {
    if (lambda.t == 1 && m == k)
      throw DomainError("superdimension: the residual algebra is osp(1|2r), which is not supported");
    return 0;
  }
  int N = 2 * (m - k) + (lambda.t == 1 ? 1 : 0);
  long long total = 0;
  for (const auto& [nu, g] : dsr(lambda, k).components) {
    DominantWeight w = diagram_to_weight(nu, m - k, 0);
    std::vector<int> l2;
    for (auto c : w.a) l2.push_back(c.twice);
    long long dim = N <= 2 ? 1 : detail::weyl_dim_from_shifted(N, l2);
    total += (g.d0 - g.d1) * dim;
  }
  return total;
}

}  // namespace ospds
