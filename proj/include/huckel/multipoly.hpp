#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "huckel/bigint.hpp"
#include "huckel/error.hpp"

namespace huckel {

/// Parameter pairs x_i, y_i are supported for i < kMaxPairs.
inline constexpr int kMaxPairs = 16;
inline constexpr int kSlots = 2 * kMaxPairs + 1;

/// A polynomial variable: x_i, y_i (boundary parameters of row i) or z.
struct Var {
  enum class Kind : std::uint8_t { X, Y, Z };

  Kind kind = Kind::Z;
  int index = 0;

  static Var x(int i) { return {Kind::X, i}; }
  static Var y(int i) { return {Kind::Y, i}; }
  static Var z() { return {Kind::Z, 0}; }

  /// Position inside a Monomial; slots are laid out in precedence order
  /// x_{max} .. x_0, y_{max} .. y_0, z.
  int slot() const;
  static Var from_slot(int slot);

  std::string name() const;

  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Exponent vector with 16-bit exponents per slot.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial of(Var v, std::uint16_t power = 1);

  std::uint16_t exponent(Var v) const { return exps_[v.slot()]; }
  std::uint16_t at_slot(int s) const { return exps_[s]; }
  void set(Var v, std::uint16_t e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Number of x/y pairs touched, i.e. 1 + the largest pair index in use.
  int pairs_used() const;

  Monomial operator*(const Monomial& o) const;
  /// True when this monomial divides `num`; the quotient is written to `out`.
  bool divides(const Monomial& num, Monomial& out) const;

  /// Graded lexicographic comparison in variable precedence order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (int s = 0; s < kSlots; ++s) {
      if (a.exps_[s] != b.exps_[s]) return a.exps_[s] <=> b.exps_[s];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::string to_string() const;

 private:
  std::array<std::uint16_t, kSlots> exps_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  BigInt coef;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept strictly decreasing in graded-lex order and
/// never hold a zero coefficient.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT: integers embed as constants
  MultiPoly(const BigInt& c);  // NOLINT

  static MultiPoly var(Var v);
  static MultiPoly x(int i) { return var(Var::x(i)); }
  static MultiPoly y(int i) { return var(Var::y(i)); }
  static MultiPoly z() { return var(Var::z()); }
  static MultiPoly monomial(const Monomial& m, const BigInt& c);

  /// Builds from arbitrary (possibly repeated, unordered) terms.
  static MultiPoly from_terms(std::vector<Term> terms, int varcount = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  BigInt constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Number of allocated parameter pairs; fixes the JSON exponent length.
  int varcount() const { return varcount_; }
  MultiPoly& with_varcount(int v);

  int total_degree() const;
  int degree_in(Var v) const;
  bool uses(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> variables() const;

  BigInt coefficient(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const BigInt& c) const;
  MultiPoly pow(unsigned e) const;

  /// Replaces every occurrence of `v` by `value`.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Applies the involution x_i <-> y_i.
  MultiPoly swap_xy() const;

  std::size_t hash() const;

  /// Canonical text, e.g. `x3*y2 - 2*x0^2 + 5`.
  std::string to_string() const;
  static MultiPoly parse(std::string_view text);

 private:
  void normalize_varcount();

  std::vector<Term> terms_;
  int varcount_ = 0;
};

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

/// Quotient q with q * den == num, by leading-term cancellation.
/// Throws Errc::NotDivisible when a remainder appears.
MultiPoly poly_exact_div(const MultiPoly& num, const MultiPoly& den);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return poly_exact_div(a, b); }

template <class Ring>
using Assignment = std::map<Var, Ring>;

/// Evaluates `p` in any commutative ring that embeds the integers.
template <class Ring>
Ring poly_eval(const MultiPoly& p, const Assignment<Ring>& values) {
  Ring total(0);
  std::map<Var, std::vector<Ring>> powers;
  for (const Term& t : p.terms()) {
    Ring term{t.coef};
    for (int s = 0; s < kSlots; ++s) {
      const unsigned e = t.mono.at_slot(s);
      if (e == 0) continue;
      const Var v = Var::from_slot(s);
      auto it = values.find(v);
      if (it == values.end()) throw Error(Errc::UnboundVariable, v.name());
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Ring(1));
      while (cache.size() <= e) cache.push_back(cache.back() * it->second);
      term = term * cache[e];
    }
    total = total + term;
  }
  return total;
}

struct PropertyFlags {
  bool homogeneous = false;
  bool palindromic = false;
  bool monic_extremes = false;
};

/// Homogeneity of the given degree, symmetry under x_i <-> y_i, and unit
/// coefficients on x^d and y^d (bivariate case, pair 0).
PropertyFlags poly_properties(const MultiPoly& p, int degree);

/// Coefficients c_k of x^(d-k) y^k for a bivariate polynomial in pair 0.
std::vector<BigInt> bivariate_coefficients(const MultiPoly& p, int degree);
/// Coefficients of z^k, k = 0 .. degree in z.
std::vector<BigInt> univariate_coefficients(const MultiPoly& p, Var v);

}  // namespace huckel

template <>
struct std::hash<huckel::MultiPoly> {
  std::size_t operator()(const huckel::MultiPoly& p) const noexcept { return p.hash(); }
};
