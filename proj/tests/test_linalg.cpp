#include <doctest.h>

#include <random>

#include "huckel/builders.hpp"
#include "huckel/linalg.hpp"
#include "support.hpp"

using namespace huckel;

TEST_CASE("integer determinant against rational elimination") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int n = 1; n <= 8; ++n) {
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) m(i, j) = d(rng);
    }
    const BigInt want = testing::rational_det(m);
    CHECK(det_integer(m) == want);
    CHECK(bareiss_det(m) == want);
    CHECK(minor_expansion_det(m) == want);
    CHECK(permutation_expansion_det(m) == want);
  }
}

TEST_CASE("bareiss handles zero leading pivots and singular input") {
  IntMatrix m(3, 3);
  m << 0, 1, 2, 1, 0, 3, 4, -3, 8;
  CHECK(bareiss_det(m) == -2);
  IntMatrix z = IntMatrix::Constant(3, 3, BigInt(0));
  z(0, 1) = 1;
  CHECK(bareiss_det(z) == 0);
}

TEST_CASE("all symbolic strategies agree on H_2") {
  const PolyMatrix h = build_huckel(0, 2);
  const MultiPoly want = det(h, DetStrategy::FractionFree);
  CHECK(det(h, DetStrategy::SparseMinor) == want);
  CHECK(det(h, DetStrategy::PermutationExpansion) == want);
  CHECK(det(h, DetStrategy::MultivariateInterpolation) == want);
  CHECK(det(h, DetStrategy::Auto) == want);
  CHECK_THROWS_AS(det(h, DetStrategy::BivariateInterpolation), Error);
  const PolyMatrix u = build_huckel(0, 2, BoundaryParams::uniform());
  CHECK(det(u, DetStrategy::BivariateInterpolation) == det(u, DetStrategy::FractionFree));
}

TEST_CASE("strategy names round trip") {
  for (auto s : {DetStrategy::FractionFree, DetStrategy::SparseMinor, DetStrategy::BivariateInterpolation,
                 DetStrategy::PermutationExpansion, DetStrategy::MultivariateInterpolation, DetStrategy::Auto}) {
    CHECK(parse_strategy(strategy_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_strategy("lu"), Error);
}

TEST_CASE("newton interpolation recovers a cubic") {
  std::vector<BigInt> v;
  for (long t = 0; t < 4; ++t) v.push_back(2 * t * t * t - t + 5);
  CHECK(interpolate_nodes(v) == std::vector<BigInt>{5, -1, 0, 2});
}

TEST_CASE("characteristic polynomial of Q_n") {
  const MultiPoly c = charpoly(build_pascal(PascalKind::Symmetric, 2));
  CHECK(univariate_coefficients(c, Var::z()) == std::vector<BigInt>{1, 9, 9, 1});
}

TEST_CASE("permanents") {
  IntMatrix ones = IntMatrix::Constant(5, 5, BigInt(1));
  CHECK(ryser_permanent(ones) == 120);
  CHECK(permanent_integer(ones) == 120);
  IntMatrix m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  CHECK(permanent_integer(m) == 450);
  IntMatrix big = IntMatrix::Constant(12, 12, BigInt(1000000007));
  CHECK(permanent_integer(big) == factorial(12) * pow(BigInt(1000000007), 12));
  const PolyMatrix h = build_huckel(0, 1);
  CHECK(permanent(h) == det(h));
}

TEST_CASE("cost guards") {
  CostLimits l;
  l.perm_symbolic = 3;
  CHECK_THROWS_AS(permanent(build_huckel(0, 1), l), Error);
}

TEST_CASE("rank one factor") {
  PolyMatrix m(2, 2);
  const MultiPoly x = MultiPoly::x(1);
  m << x, -x, -x, x;
  const Rank1Factor f = rank1_factor(m, MultiPoly(1));
  CHECK(f.u == std::vector<int>{1, -1});
  CHECK(f.num == x);
}
