#pragma once

#include <string_view>

#include "huckel/bigint.hpp"
#include "huckel/cycint.hpp"

namespace huckel {

/// Andrews' count of totally symmetric self-complementary plane partitions,
/// equal to the number of n x n alternating sign matrices.
BigInt formula_A(int n);
/// Half-turn symmetric alternating sign matrices.
BigInt formula_AHT(int n);
/// 0! 1! ... (k-1)!
BigInt superfactorial(int k);
/// Plane partitions inside an a x b x c box.
BigInt formula_macmahon(int a, int b, int c);

/// prod_{k=0}^{n} k! (n+k+1)! / ((2k)! (2k+1)!), which should be 1.
Rational unit_identity(int n);
/// det(Q_n + I) from Andrews' product.
BigInt andrews_product(int n);
/// The same number as A(n+1) prod (3k+2)/(3k+1).
BigInt andrews_rewritten(int n);

enum class PredictCase {
  Theta0,
  ThetaPi6,
  ThetaPi3,
  ThetaPi2,
  AndrewsQI,
  CiucuMinusI,
  CiucuOmega3,
  CiucuOmega6,
};

std::string_view case_name(PredictCase c);
PredictCase parse_case(std::string_view name);

struct PredictedValue {
  PredictCase which;
  int n;
  CycInt value;
};

/// Closed-form value of det H_n(theta) for the theta cases, and of
/// det(Q_n + omega I) for the Andrews and Ciucu cases (omega = 1, -1,
/// exp(2 pi i/3), exp(i pi/3)).
PredictedValue predicted_det(PredictCase c, int n);

/// det(Q_{L-1} + i I) / (i^{L/2} L^{-5/48} A_HT(L)^2) for even L.
double mitra_ratio(int L);
/// 0.81099753 - 0.028861 L^{-3/2} + 0.021012 L^{-2}
double mitra_series(int L);
/// Asymptotic estimate of det H_{L-1}(pi/4).
double mitra_estimate(int L);

}  // namespace huckel
