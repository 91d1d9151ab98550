#include "huckel/formulas.hpp"

#include <cmath>

#include "huckel/builders.hpp"
#include "huckel/linalg.hpp"

namespace huckel {

namespace {

BigInt as_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw Error(Errc::NotDivisible, std::string(what) + " is not an integer");
  return BigInt(numerator(r));
}

Rational fact(int k) { return Rational(factorial(unsigned(k))); }

}  // namespace

BigInt formula_A(int n) {
  if (n < 1) throw Error(Errc::BadRange, "A(n) needs n >= 1");
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= fact(3 * k + 1) / fact(n + k);
  return as_integer(r, "A(n)");
}

BigInt formula_AHT(int n) {
  if (n < 1) throw Error(Errc::BadRange, "A_HT(n) needs n >= 1");
  const int h = n / 2;
  Rational r = 1;
  for (int k = 0; k < h; ++k) r *= fact(3 * k) * fact(3 * k + 2) / (fact(h + k) * fact(h + k));
  if (n % 2) r *= fact(h) * fact(3 * h) / (fact(2 * h) * fact(2 * h));
  return as_integer(r, "A_HT(n)");
}

BigInt superfactorial(int k) {
  BigInt r = 1;
  for (int i = 1; i < k; ++i) r *= factorial(unsigned(i));
  return r;
}

BigInt formula_macmahon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw Error(Errc::BadRange, "box sides must be nonnegative");
  const BigInt num = superfactorial(a) * superfactorial(b) * superfactorial(c) * superfactorial(a + b + c);
  const BigInt den = superfactorial(a + b) * superfactorial(a + c) * superfactorial(b + c);
  return exact_div(num, den);
}

Rational unit_identity(int n) {
  Rational r = 1;
  for (int k = 0; k <= n; ++k) r *= fact(k) * fact(n + k + 1) / (fact(2 * k) * fact(2 * k + 1));
  return r;
}

BigInt andrews_product(int n) {
  Rational r = 1;
  for (int k = 0; k <= n; ++k) r *= fact(k) * fact(3 * k + 2) / (Rational(3 * k + 1) * fact(2 * k) * fact(2 * k + 1));
  return as_integer(r, "Andrews product");
}

BigInt andrews_rewritten(int n) {
  Rational r = Rational(formula_A(n + 1));
  for (int k = 0; k <= n; ++k) r *= Rational(3 * k + 2, 3 * k + 1);
  return as_integer(r, "A(n+1) prod (3k+2)/(3k+1)");
}

std::string_view case_name(PredictCase c) {
  switch (c) {
    case PredictCase::Theta0: return "theta0";
    case PredictCase::ThetaPi6: return "thetaPi6";
    case PredictCase::ThetaPi3: return "thetaPi3";
    case PredictCase::ThetaPi2: return "thetaPi2";
    case PredictCase::AndrewsQI: return "andrewsQI";
    case PredictCase::CiucuMinusI: return "ciucuMinusI";
    case PredictCase::CiucuOmega3: return "ciucuOmega3";
    case PredictCase::CiucuOmega6: return "ciucuOmega6";
  }
  return "?";
}

PredictCase parse_case(std::string_view name) {
  for (int i = 0; i <= int(PredictCase::CiucuOmega6); ++i) {
    if (case_name(PredictCase(i)) == name) return PredictCase(i);
  }
  throw Error(Errc::CaseMismatch, "unknown case '" + std::string(name) + "'");
}

PredictedValue predicted_det(PredictCase c, int n) {
  if (n < 0) throw Error(Errc::CaseMismatch, "negative size index");
  const CycInt sqrt3 = CycInt::sqrt3();
  auto aht_sq = [&] {
    const BigInt v = formula_AHT(n + 1);
    CycInt r(BigInt(v * v));
    return n % 2 == 0 ? r * sqrt3 : r;
  };
  CycInt v;
  switch (c) {
    case PredictCase::Theta0: v = andrews_rewritten(n); break;
    case PredictCase::AndrewsQI: v = andrews_product(n); break;
    case PredictCase::ThetaPi3: v = formula_A(n + 1); break;
    case PredictCase::ThetaPi6: v = aht_sq(); break;
    case PredictCase::ThetaPi2:
    case PredictCase::CiucuMinusI: {
      if (n % 2 == 0) {
        v = 0;
        break;
      }
      const int m = (n - 1) / 2;
      const BigInt a = formula_A(m + 1);
      BigInt a4 = a * a * a * a;
      // det H_n(pi/2) = |det(Q_n - I)|
      if (c == PredictCase::CiucuMinusI && m % 2 == 0) a4 = -a4;
      v = a4;
      break;
    }
    case PredictCase::CiucuOmega3: v = CycInt::zeta_pow(2L * (n + 1)) * CycInt(formula_A(n + 1)); break;
    case PredictCase::CiucuOmega6: v = CycInt::zeta_pow(n + 1) * aht_sq(); break;
  }
  return {c, n, v};
}

double mitra_series(int L) {
  const double l = L;
  return 0.81099753 - 0.028861 / std::pow(l, 1.5) + 0.021012 / (l * l);
}

double mitra_estimate(int L) {
  const BigInt aht = formula_AHT(L);
  return std::pow(double(L), -5.0 / 48.0) * BigInt(aht * aht).convert_to<double>() * mitra_series(L);
}

double mitra_ratio(int L) {
  if (L % 2) throw Error(Errc::BadParity, "L must be even");
  if (L < 2 || L > 40) throw Error(Errc::BadRange, "L outside 2..40");
  const GaussMatrix m = build_general_binomial_gauss(0, L - 1, GaussInt::i());
  const GaussInt d = bareiss_det<GaussInt>(m);
  const GaussInt real = exact_div(d, GaussInt::i().pow(unsigned(L / 2)));
  if (!real.im().is_zero()) throw Error(Errc::NotDivisible, "det(Q + iI) / i^{L/2} is not real");
  const BigInt aht = formula_AHT(L);
  return real.re().convert_to<double>() / (std::pow(double(L), -5.0 / 48.0) * BigInt(aht * aht).convert_to<double>());
}

}  // namespace huckel
