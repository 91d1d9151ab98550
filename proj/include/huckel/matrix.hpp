#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <vector>

#include "huckel/bigint.hpp"
#include "huckel/cycint.hpp"
#include "huckel/multipoly.hpp"

namespace Eigen {

template <class Ring>
struct ExactRingTraits : GenericNumTraits<Ring> {
  using Real = Ring;
  using NonInteger = Ring;
  using Literal = Ring;
  using Nested = Ring;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<huckel::MultiPoly> : ExactRingTraits<huckel::MultiPoly> {};
template <>
struct NumTraits<huckel::CycInt> : ExactRingTraits<huckel::CycInt> {};
template <>
struct NumTraits<huckel::GaussInt> : ExactRingTraits<huckel::GaussInt> {};

}  // namespace Eigen

namespace huckel {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using PolyMatrix = DenseMatrix<MultiPoly>;
using IntMatrix = DenseMatrix<BigInt>;
using CycMatrix = DenseMatrix<CycInt>;
using GaussMatrix = DenseMatrix<GaussInt>;

/// Exact product without Eigen's blocked kernels, which assume a field.
template <class Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

template <class Scalar>
DenseMatrix<Scalar> identity(Eigen::Index n) {
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <class To, class From, class F>
DenseMatrix<To> map_entries(const DenseMatrix<From>& m, F&& f) {
  DenseMatrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  }
  return out;
}

template <class Scalar>
bool equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Integer matrix embedded into another ring.
template <class Ring>
DenseMatrix<Ring> embed(const IntMatrix& m) {
  return map_entries<Ring>(m, [](const BigInt& v) { return Ring(v); });
}

/// Evaluates every entry under a variable assignment.
template <class Ring>
DenseMatrix<Ring> specialize(const PolyMatrix& m, const Assignment<Ring>& values) {
  return map_entries<Ring>(m, [&](const MultiPoly& p) { return poly_eval<Ring>(p, values); });
}

/// Constant polynomial matrix to integers; throws when an entry is symbolic.
IntMatrix to_integer(const PolyMatrix& m);
PolyMatrix to_poly(const IntMatrix& m);

/// Removes the listed rows and columns (simultaneously).
template <class Scalar>
DenseMatrix<Scalar> delete_rows_cols(const DenseMatrix<Scalar>& m, const std::vector<Eigen::Index>& drop) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool dropped = false;
    for (auto d : drop) dropped = dropped || d == i;
    if (!dropped) keep.push_back(i);
  }
  DenseMatrix<Scalar> out(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out(Eigen::Index(a), Eigen::Index(b)) = m(keep[a], keep[b]);
  }
  return out;
}

/// Simultaneous permutation: out(i, j) = m(order[i], order[j]).
template <class Scalar>
DenseMatrix<Scalar> permute(const DenseMatrix<Scalar>& m, const std::vector<Eigen::Index>& order) {
  const auto n = static_cast<Eigen::Index>(order.size());
  DenseMatrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(order[std::size_t(i)], order[std::size_t(j)]);
  }
  return out;
}

/// Variables appearing anywhere in the matrix, in precedence order.
std::vector<Var> matrix_variables(const PolyMatrix& m);

/// Multi-line aligned grid of entry texts.
std::string to_grid(const PolyMatrix& m);

}  // namespace huckel
