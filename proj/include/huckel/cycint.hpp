#pragma once

#include <array>
#include <complex>
#include <string>

#include "huckel/bigint.hpp"

namespace huckel {

/// Element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z], z = exp(i pi/6), reduced by
/// z^4 = z^2 - 1. Every multiple of pi/6 is a power of z.
class CycInt {
 public:
  CycInt() = default;
  CycInt(long v) : c_{BigInt(v), 0, 0, 0} {}  // NOLINT
  CycInt(const BigInt& v) : c_{v, 0, 0, 0} {}  // NOLINT
  CycInt(BigInt a0, BigInt a1, BigInt a2, BigInt a3) : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static CycInt zeta() { return CycInt(0, 1, 0, 0); }
  /// z^k for any integer k (z^12 = 1).
  static CycInt zeta_pow(long k);
  /// sqrt(3) = z + z^-1.
  static CycInt sqrt3();

  const std::array<BigInt, 4>& coords() const { return c_; }
  const BigInt& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  /// Imaginary part vanishes: a2 = 0 and a1 = -2 a3.
  bool is_real() const { return c_[2].is_zero() && c_[1] == -2 * c_[3]; }

  /// Image under z -> z^j, j coprime to 12.
  CycInt galois(int j) const;
  CycInt conj() const { return galois(11); }
  /// Field norm down to Z (product of the four conjugates).
  BigInt norm() const;

  std::complex<double> to_complex() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator-() const { return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]); }
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }

  CycInt pow(unsigned e) const;

  /// Readable form; real elements print as `a + b*sqrt3`.
  std::string to_string() const;

 private:
  std::array<BigInt, 4> c_{};
};

inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline bool is_zero(const CycInt& v) { return v.is_zero(); }
/// Exact quotient in Z[z]; throws Errc::NotDivisible.
CycInt exact_div(const CycInt& a, const CycInt& b);

/// Gaussian integer re + i im, used for the angle pi/4 where exp(i pi/2) = i.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(long v) : re_(v), im_(0) {}  // NOLINT
  GaussInt(const BigInt& v) : re_(v), im_(0) {}  // NOLINT
  GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussInt i() { return GaussInt(0, 1); }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussInt conj() const { return GaussInt(re_, -im_); }
  BigInt norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

  GaussInt& operator+=(const GaussInt& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussInt& operator-=(const GaussInt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussInt operator-() const { return GaussInt(-re_, -im_); }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return GaussInt(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  GaussInt pow(unsigned e) const;
  std::string to_string() const;

 private:
  BigInt re_, im_;
};

inline bool is_zero(const GaussInt& v) { return v.is_zero(); }
GaussInt exact_div(const GaussInt& a, const GaussInt& b);

}  // namespace huckel
