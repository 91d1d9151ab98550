#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace huckel {

// Expression templates are disabled so the types behave as plain values
// inside Eigen containers and generic kernels.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const BigInt& v) { return v.is_zero(); }

/// a / b, throwing Errc::NotDivisible when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

/// k! from a process-wide cache (thread safe).
BigInt factorial(unsigned k);

BigInt binomial(long n, long k);

/// Floor of the square root by Newton iteration; v must be nonnegative.
BigInt isqrt(const BigInt& v);

/// Root r with r*r == v, or nullopt when v is not a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& v);

BigInt parse_bigint(const std::string& text);

}  // namespace huckel
