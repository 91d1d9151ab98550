#include <doctest.h>

#include "huckel/builders.hpp"
#include "huckel/linalg.hpp"

using namespace huckel;

TEST_CASE("triangle graph shape") {
  const TriangleGraph g(0, 3);
  CHECK(g.vertex_count() == 16);
  CHECK(g.row_lengths() == std::vector<int>{1, 3, 5, 7});
  // each row of 2m+1 atoms is a path, plus m vertical bonds to the row above
  CHECK(g.edges().size() == 0 + 2 + 1 + 4 + 2 + 6 + 3);
  for (Index v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) <= 3);
  const TriangleGraph t(6, 7);
  CHECK(t.vertex_count() == 28);
}

TEST_CASE("hueckel matrix is symmetric up to x <-> y") {
  const PolyMatrix h = build_huckel(0, 2);
  CHECK(h.rows() == 9);
  for (Index i = 0; i < h.rows(); ++i) {
    for (Index j = 0; j < h.cols(); ++j) CHECK(h(i, j).swap_xy() == h(j, i));
  }
  CHECK(h(0, 0) == MultiPoly::x(0) + MultiPoly::y(0));
  const TriangleGraph g(0, 2);
  CHECK(h(g.index(2, 4), g.index(2, 0)) == MultiPoly::x(2));
  CHECK(h(g.index(2, 0), g.index(2, 4)) == MultiPoly::y(2));
}

TEST_CASE("trapezium sizes") {
  CHECK(build_huckel(6, 7).rows() == 28);
  CHECK(build_huckel(7, 9).rows() == 51);
  CHECK(build_huckel(6, 9).rows() == 64);
  CHECK_THROWS_AS(build_huckel(3, 2), Error);
}

TEST_CASE("pascal matrices") {
  const IntMatrix p = build_pascal(PascalKind::Lower, 5);
  const IntMatrix pi = build_pascal(PascalKind::InverseLower, 5);
  const IntMatrix q = build_pascal(PascalKind::Symmetric, 5);
  CHECK(equal(multiply(p, pi), identity<BigInt>(6)));
  CHECK(equal(multiply<BigInt>(p, p.transpose()), q));
  CHECK(q(3, 2) == 10);
  const IntMatrix j = build_reversal(3);
  CHECK(equal(multiply(j, j), identity<BigInt>(4)));
}

TEST_CASE("binomial matrix for H_{6,9}") {
  const PolyMatrix r = build_reduced(6, 9);
  CHECK(r.rows() == 4);
  CHECK(r(0, 0) == MultiPoly::x(9) + MultiPoly::y(9));
  CHECK(r(0, 1) == MultiPoly::y(9).scaled(-9));
  CHECK(r(0, 2) == MultiPoly::y(9).scaled(36));
  CHECK(r(0, 3) == MultiPoly::y(9).scaled(-84));
  CHECK(r(3, 1) == MultiPoly::x(8).scaled(28));
}

TEST_CASE("general binomial matrix at m = 0 is Q_n + w") {
  const CycMatrix g = build_general_binomial(0, 4, CycInt(1));
  const IntMatrix q = build_pascal(PascalKind::Symmetric, 4);
  for (Index i = 0; i <= 4; ++i) {
    for (Index j = 0; j <= 4; ++j) CHECK(g(i, j) == CycInt(q(i, j) + (i == j ? 1 : 0)));
  }
}

TEST_CASE("blocks") {
  const PolyMatrix t = block_T(2, MultiPoly::x(2), MultiPoly::y(2));
  CHECK(t.rows() == 5);
  CHECK(t(4, 0) == MultiPoly::x(2));
  CHECK(t(0, 4) == MultiPoly::y(2));
  CHECK(t(1, 2) == MultiPoly(1));
  const IntMatrix r = block_R(2);
  CHECK(r.rows() == 5);
  CHECK(r.cols() == 3);
  CHECK(alternating_u(3) == std::vector<int>{1, 0, -1, 0, 1});
}

TEST_CASE("symmetrized form keeps the determinant") {
  for (int n = 1; n <= 3; ++n) {
    const auto s = build_symmetrized(0, n);
    const MultiPoly d = det(build_huckel(0, n));
    CHECK(det(s.matrix).scaled(s.sign) == d);
  }
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("binomial matrix is x J P^T J + y J P^-1 J") {
  const int n = 5;
  const IntMatrix j = build_reversal(n);
  const IntMatrix p = build_pascal(PascalKind::Lower, n);
  const IntMatrix lower = multiply(multiply<BigInt>(j, p.transpose()), j);
  const IntMatrix upper = multiply(multiply(j, build_pascal(PascalKind::InverseLower, n)), j);
  const PolyMatrix r = build_reduced(0, n, BoundaryParams::uniform());
  const MultiPoly x = MultiPoly::x(0), y = MultiPoly::y(0);
  for (Index a = 0; a <= n; ++a) {
    for (Index b = 0; b <= n; ++b) CHECK(r(a, b) == x.scaled(lower(a, b)) + y.scaled(upper(a, b)));
  }
}

TEST_CASE("symmetrized sign is (-1)^(n(n+1)/2)") {
  for (int n = 0; n <= 6; ++n) CHECK(build_symmetrized(0, n).sign == (n * (n + 1) / 2 % 2 ? -1 : 1));
}
