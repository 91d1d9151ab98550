#include <doctest.h>

#include "huckel/cycint.hpp"
#include "huckel/multipoly.hpp"
#include "huckel/serialize.hpp"

using namespace huckel;

TEST_CASE("bigint helpers") {
  CHECK(factorial(20) == parse_bigint("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(exact_sqrt(BigInt(7056)) == BigInt(84));
  CHECK_FALSE(exact_sqrt(BigInt(7057)));
  CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), Error);
  CHECK_THROWS_AS(parse_bigint("12a"), Error);
}

TEST_CASE("polynomial ring operations") {
  const MultiPoly x = MultiPoly::x(0), y = MultiPoly::y(0);
  const MultiPoly s = x + y;
  CHECK((s * s - x * x - y * y) == (x * y).scaled(2));
  CHECK(s.pow(3).total_degree() == 3);
  CHECK(exact_div(s.pow(3), s) == s * s);
  CHECK_THROWS_AS(exact_div(s * s + MultiPoly(1), s), Error);
  CHECK((x - x).is_zero());
  CHECK(s.swap_xy() == s);
  CHECK((x * y.pow(2)).swap_xy() == x.pow(2) * y);
  CHECK((s * x).substitute(Var::y(0), MultiPoly(2)) == x * x + x.scaled(2));
}

TEST_CASE("polynomial text round trip") {
  const MultiPoly p = MultiPoly::x(3) * MultiPoly::y(2) - MultiPoly::x(0).pow(2).scaled(2) + MultiPoly(5);
  CHECK(p.to_string() == "x3*y2 - 2*x0^2 + 5");
  CHECK(MultiPoly::parse(p.to_string()) == p);
  CHECK_THROWS_AS(MultiPoly::parse("x3**2"), Error);
}

TEST_CASE("polynomial evaluation and properties") {
  const MultiPoly x = MultiPoly::x(0), y = MultiPoly::y(0);
  const MultiPoly p = x * x + (x * y).scaled(3) + y * y;
  CHECK(poly_eval<BigInt>(p, {{Var::x(0), 2}, {Var::y(0), 5}}) == 59);
  CHECK_THROWS_AS(poly_eval<BigInt>(p, {{Var::x(0), 2}}), Error);
  const auto f = poly_properties(p, 2);
  CHECK(f.homogeneous);
  CHECK(f.palindromic);
  CHECK(f.monic_extremes);
  CHECK_FALSE(poly_properties(p + x, 2).homogeneous);
  CHECK(bivariate_coefficients(p, 2) == std::vector<BigInt>{1, 3, 1});
}

TEST_CASE("polynomial json round trip") {
  MultiPoly p = MultiPoly::x(1) * MultiPoly::y(0).scaled(-7) + MultiPoly(3);
  p.with_varcount(2);
  const Json j = poly_json(p);
  CHECK(j["varcount"] == 2);
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("cyclotomic integers") {
  const CycInt z = CycInt::zeta();
  CHECK(z.pow(12) == CycInt(1));
  CHECK(z.pow(6) == CycInt(-1));
  CHECK(CycInt::sqrt3() * CycInt::sqrt3() == CycInt(3));
  CHECK(z * z.conj() == CycInt(1));
  CHECK(CycInt::zeta_pow(-1) == z.pow(11));
  // 2 cos(pi/6) = sqrt3
  CHECK(z + z.conj() == CycInt::sqrt3());
  CHECK(CycInt::sqrt3().is_real());
  CHECK_FALSE(z.is_real());
  CHECK(exact_div(CycInt(6) * z, CycInt(3)) == CycInt(2) * z);
  const auto c = z.to_complex();
  CHECK(c.real() == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(c.imag() == doctest::Approx(0.5));
}

TEST_CASE("gaussian integers") {
  const GaussInt a(1, 1), b(1, -1);
  CHECK(a * b == GaussInt(2));
  CHECK(GaussInt::i().pow(4) == GaussInt(1));
  CHECK(exact_div(GaussInt(2), a) == b);
  CHECK_THROWS_AS(exact_div(GaussInt(1), a), Error);
}
