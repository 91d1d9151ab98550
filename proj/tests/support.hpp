#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <vector>

#include "huckel/builders.hpp"
#include "huckel/linalg.hpp"

namespace huckel::testing {

/// Gaussian elimination over the rationals with row pivoting.
inline BigInt rational_det(const IntMatrix& m) {
  const Index n = m.rows();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a[std::size_t(i)].emplace_back(m(i, j));
  }
  Rational d = 1;
  for (std::size_t c = 0; c < a.size(); ++c) {
    std::size_t p = c;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < a.size(); ++k) a[r][k] -= f * a[c][k];
    }
  }
  return numerator(d);
}

/// x_i, y_i drawn uniformly from [-bound, bound] for rows k..n.
struct IntParams {
  std::vector<MultiPoly> xs, ys;
  BoundaryParams params() const { return BoundaryParams::per_row(xs, ys); }
};

inline IntParams random_params(int n, std::mt19937_64& rng, long bound = 1000) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntParams p;
  for (int i = 0; i <= n; ++i) {
    p.xs.emplace_back(dist(rng));
    p.ys.emplace_back(dist(rng));
  }
  return p;
}

inline MultiPoly S(int i) { return MultiPoly::x(i) + MultiPoly::y(i); }
inline MultiPoly XY(int i) { return MultiPoly::x(i) * MultiPoly::y(i); }

}  // namespace huckel::testing
