#include "huckel/cycint.hpp"

#include <cmath>
#include <numbers>

#include "huckel/error.hpp"

namespace huckel {

CycInt CycInt::zeta_pow(long k) {
  k %= 12;
  if (k < 0) k += 12;
  // z^6 = -1 folds the upper half onto the lower.
  const bool negate = k >= 6;
  if (negate) k -= 6;
  CycInt r;
  switch (k) {
    case 0: r = CycInt(1, 0, 0, 0); break;
    case 1: r = CycInt(0, 1, 0, 0); break;
    case 2: r = CycInt(0, 0, 1, 0); break;
    case 3: r = CycInt(0, 0, 0, 1); break;
    case 4: r = CycInt(-1, 0, 1, 0); break;  // z^2 - 1
    case 5: r = CycInt(0, -1, 0, 1); break;  // z^3 - z
  }
  return negate ? -r : r;
}

CycInt CycInt::sqrt3() { return zeta_pow(1) + zeta_pow(-1); }

CycInt& CycInt::operator+=(const CycInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  std::array<BigInt, 7> w{};
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (!b.c_[j].is_zero()) w[i + j] += a.c_[i] * b.c_[j];
    }
  }
  // z^k = z^(k-2) - z^(k-4) for k >= 4.
  for (int k = 6; k >= 4; --k) {
    if (w[k].is_zero()) continue;
    w[k - 2] += w[k];
    w[k - 4] -= w[k];
    w[k] = 0;
  }
  return CycInt(w[0], w[1], w[2], w[3]);
}

CycInt CycInt::galois(int j) const {
  CycInt r = c_[0];
  for (int k = 1; k < 4; ++k) {
    if (!c_[k].is_zero()) r += zeta_pow(static_cast<long>(j) * k) * CycInt(c_[k]);
  }
  return r;
}

BigInt CycInt::norm() const {
  const CycInt n = *this * galois(5) * galois(7) * galois(11);
  if (!n.c_[1].is_zero() || !n.c_[2].is_zero() || !n.c_[3].is_zero()) {
    throw Error(Errc::BadRange, "norm is not rational: " + n.to_string());
  }
  return n.c_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z = std::polar(1.0, std::numbers::pi / 6.0), acc = 0.0, p = 1.0;
  for (int k = 0; k < 4; ++k) {
    acc += c_[k].convert_to<double>() * p;
    p *= z;
  }
  return acc;
}

CycInt CycInt::pow(unsigned e) const {
  CycInt result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string CycInt::to_string() const {
  if (is_real()) {
    // a0 + a1 z + a3 z^3 with a1 = -2 a3 equals a0 - a3 sqrt3.
    const BigInt s = -c_[3];
    if (s.is_zero()) return c_[0].str();
    std::string out;
    if (!c_[0].is_zero()) out = c_[0].str() + (s.sign() < 0 ? " - " : " + ");
    else if (s.sign() < 0) out = "-";
    const BigInt mag = s.sign() < 0 ? BigInt(-s) : s;
    out += (mag == 1 ? std::string() : mag.str() + "*") + "sqrt3";
    return out;
  }
  std::string out;
  static const char* names[] = {"", "z", "z^2", "z^3"};
  for (int k = 0; k < 4; ++k) {
    if (c_[k].is_zero()) continue;
    const bool neg = c_[k].sign() < 0;
    const BigInt mag = neg ? BigInt(-c_[k]) : c_[k];
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (k == 0) out += mag.str();
    else out += (mag == 1 ? std::string() : mag.str() + "*") + names[k];
  }
  return out.empty() ? "0" : out;
}

CycInt exact_div(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw Error(Errc::NotDivisible, "division by zero in Z[z]");
  const CycInt cofactor = b.galois(5) * b.galois(7) * b.galois(11);
  const BigInt n = (b * cofactor)[0];
  const CycInt num = a * cofactor;
  try {
    return CycInt(exact_div(num[0], n), exact_div(num[1], n), exact_div(num[2], n), exact_div(num[3], n));
  } catch (const Error&) {
    throw Error(Errc::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  }
}

GaussInt GaussInt::pow(unsigned e) const {
  GaussInt result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string GaussInt::to_string() const {
  if (im_.is_zero()) return re_.str();
  std::string out = re_.is_zero() ? std::string() : re_.str();
  const bool neg = im_.sign() < 0;
  const BigInt mag = neg ? BigInt(-im_) : im_;
  if (out.empty()) out = neg ? "-" : "";
  else out += neg ? " - " : " + ";
  out += (mag == 1 ? std::string() : mag.str() + "*") + "i";
  return out;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw Error(Errc::NotDivisible, "division by zero in Z[i]");
  const GaussInt num = a * b.conj();
  const BigInt n = b.norm();
  try {
    return GaussInt(exact_div(num.re(), n), exact_div(num.im(), n));
  } catch (const Error&) {
    throw Error(Errc::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  }
}

}  // namespace huckel
