#include <doctest.h>

#include "huckel/error.hpp"
#include "huckel/formulas.hpp"

using namespace huckel;

TEST_CASE("alternating sign matrix counts") {
  CHECK(formula_A(1) == 1);
  CHECK(formula_A(7) == 218348);
  CHECK(formula_A(10) == parse_bigint("129534272700"));
  CHECK(formula_AHT(7) == 588);
  CHECK(formula_AHT(9) == 39204);
}

TEST_CASE("macmahon boxes") {
  CHECK(formula_macmahon(1, 1, 1) == 2);
  CHECK(formula_macmahon(2, 2, 2) == 20);
  CHECK(formula_macmahon(3, 3, 3) == 980);
  CHECK(formula_macmahon(3, 5, 7) == formula_macmahon(7, 3, 5));
}

TEST_CASE("superfactorial") {
  CHECK(superfactorial(1) == 1);
  CHECK(superfactorial(5) == 288);
}

TEST_CASE("unit product identity") {
  for (int n = 0; n <= 20; ++n) CHECK(unit_identity(n) == 1);
}

TEST_CASE("det(Q_n + I) two ways") {
  for (int n = 0; n <= 10; ++n) CHECK(andrews_product(n) == andrews_rewritten(n));
  CHECK(andrews_product(3) == 132);
}

TEST_CASE("predicted angle values") {
  CHECK(predicted_det(PredictCase::Theta0, 3).value == CycInt(132));
  CHECK(predicted_det(PredictCase::ThetaPi2, 4).value == CycInt(0));
  CHECK(predicted_det(PredictCase::ThetaPi6, 5).value == CycInt(19600));
  CHECK(predicted_det(PredictCase::ThetaPi6, 2).value == CycInt::sqrt3() * CycInt(9));
  CHECK(predicted_det(PredictCase::ThetaPi3, 6).value == CycInt(218348));
  CHECK(predicted_det(PredictCase::CiucuMinusI, 4).value == CycInt(0));
  for (auto c : {PredictCase::Theta0, PredictCase::ThetaPi6, PredictCase::CiucuOmega6}) CHECK(parse_case(case_name(c)) == c);
  CHECK_THROWS_AS(parse_case("theta5"), Error);
}

TEST_CASE("mitra ratio") {
  CHECK(mitra_ratio(4) == doctest::Approx(0.811).epsilon(0.01));
  CHECK(mitra_estimate(4) == doctest::Approx(69.996).epsilon(1e-4));
  CHECK(mitra_estimate(6) == doctest::Approx(13166.70).epsilon(1e-5));
  CHECK_THROWS_AS(mitra_ratio(5), Error);
}
