#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "huckel/matrix.hpp"

namespace huckel {

enum class DetStrategy {
  FractionFree,
  SparseMinor,
  BivariateInterpolation,
  PermutationExpansion,
  // Tensor-grid interpolation over every variable; the default for large
  // symbolic matrices.
  MultivariateInterpolation,
  Auto,
};

std::string_view strategy_name(DetStrategy s);
DetStrategy parse_strategy(std::string_view name);

struct DetOptions {
  /// Homogeneous degree for bivariate interpolation; inferred when absent.
  std::optional<int> degree;
  /// Largest interpolation grid accepted before CostGuard.
  std::size_t max_grid = std::size_t(1) << 16;
};

// ---------------------------------------------------------------------------
// Generic kernels. Ring needs +, -, *, is_zero and exact_div.

/// One-step Bareiss elimination. Pivots are taken in column order, swapping
/// in the first later row with a nonzero entry; a column with no candidate
/// means the determinant is zero.
template <class Ring>
Ring bareiss_det(DenseMatrix<Ring> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(Errc::BadRange, "determinant of a non-square matrix");
  if (n == 0) return Ring(1);
  bool negate = false;
  Ring prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) return Ring(0);
      a.row(k).swap(a.row(r));
      negate = !negate;
    }
    const Ring pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const bool lead_zero = is_zero(a(i, k));
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (lead_zero || is_zero(a(k, j))) {
          if (!is_zero(a(i, j))) a(i, j) = exact_div(Ring(a(i, j) * pivot), prev);
        } else {
          a(i, j) = exact_div(Ring(a(i, j) * pivot - a(i, k) * a(k, j)), prev);
        }
      }
      a(i, k) = Ring(0);
    }
    prev = pivot;
  }
  Ring d = a(n - 1, n - 1);
  return negate ? Ring(-d) : d;
}

/// Laplace expansion along rows, memoized on the set of used columns.
template <class Ring>
Ring minor_expansion_det(const DenseMatrix<Ring>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(Errc::BadRange, "determinant of a non-square matrix");
  if (n > 63) throw Error(Errc::TooLarge, "minor expansion is limited to 63 columns");
  std::unordered_map<std::uint64_t, Ring> memo;
  std::function<Ring(Eigen::Index, std::uint64_t)> rec = [&](Eigen::Index row, std::uint64_t used) -> Ring {
    if (row == n) return Ring(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Ring total(0);
    int free_before = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::uint64_t bit = std::uint64_t(1) << j;
      if (used & bit) continue;
      if (!is_zero(m(row, j))) {
        Ring sub = rec(row + 1, used | bit);
        if (!is_zero(sub)) {
          Ring term = m(row, j) * sub;
          total = free_before % 2 ? total - term : total + term;
        }
      }
      ++free_before;
    }
    memo.emplace(used, total);
    return total;
  };
  return rec(0, 0);
}

/// Visits every permutation whose entries are all nonzero. The callback gets
/// the column choice per row, the permutation sign and the entry product.
template <class Ring>
void for_each_supported_permutation(const DenseMatrix<Ring>& m,
                                    const std::function<void(const std::vector<int>&, int, const Ring&)>& visit) {
  const Eigen::Index n = m.rows();
  std::vector<int> perm(std::size_t(n), -1);
  std::vector<bool> used(std::size_t(n), false);
  std::function<void(Eigen::Index, int, const Ring&)> rec = [&](Eigen::Index row, int inversions, const Ring& prod) {
    if (row == n) {
      visit(perm, inversions % 2 ? -1 : 1, prod);
      return;
    }
    int larger_used = 0;
    for (Eigen::Index j = n - 1; j >= 0; --j) {
      if (used[std::size_t(j)]) {
        ++larger_used;
        continue;
      }
      if (is_zero(m(row, j))) continue;
      used[std::size_t(j)] = true;
      perm[std::size_t(row)] = int(j);
      rec(row + 1, inversions + larger_used, Ring(prod * m(row, j)));
      used[std::size_t(j)] = false;
    }
  };
  rec(0, 0, Ring(1));
}

template <class Ring>
Ring permutation_expansion_det(const DenseMatrix<Ring>& m) {
  Ring total(0);
  for_each_supported_permutation<Ring>(m, [&](const std::vector<int>&, int sign, const Ring& p) {
    total = sign > 0 ? total + p : total - p;
  });
  return total;
}

// ---------------------------------------------------------------------------

/// Integer determinant (Bareiss with zero skipping).
BigInt det_integer(const IntMatrix& m);

MultiPoly det(const PolyMatrix& m, DetStrategy s = DetStrategy::Auto, const DetOptions& opt = {});

/// Coefficients of a polynomial of degree <= values.size()-1 from its
/// values at t = 0, 1, 2, ...; throws NotDivisible if they are not integers.
std::vector<BigInt> interpolate_nodes(const std::vector<BigInt>& values);

/// Upper bound on the degree of det(m) in v: min of row-wise and
/// column-wise sums of the largest entry degree.
int det_degree_bound(const PolyMatrix& m, Var v);

/// det(zI + M) in the variable z.
MultiPoly charpoly(const IntMatrix& m);

/// M = (num/den) u u^T with u in {-1, 0, 1} and the first nonzero u equal
/// to +1. `scaled` is den * M, which must be polynomial.
struct Rank1Factor {
  MultiPoly num;
  MultiPoly den;
  std::vector<int> u;
};
Rank1Factor rank1_factor(const PolyMatrix& scaled, const MultiPoly& den);

// ---------------------------------------------------------------------------
// Permanents.

/// Ryser inclusion-exclusion over Gray-code column subsets. Row sums are
/// updated incrementally and subsets with a vanishing row sum are skipped.
template <class Ring>
Ring ryser_permanent(const DenseMatrix<Ring>& m) {
  const int n = int(m.rows());
  if (n != m.cols()) throw Error(Errc::BadRange, "permanent of a non-square matrix");
  if (n == 0) return Ring(1);
  if (n > 30) throw Error(Errc::TooLarge, "Ryser is limited to 30 columns");
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!is_zero(m(i, j))) col_rows[std::size_t(j)].push_back(i);
    }
  }
  std::vector<Ring> sums(std::size_t(n), Ring(0));
  int zero_rows = n;
  Ring total(0);
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t(1) << n); ++step) {
    const int j = __builtin_ctzll(step);
    const bool adding = !(gray >> j & 1);
    gray ^= std::uint64_t(1) << j;
    for (int i : col_rows[std::size_t(j)]) {
      const bool was_zero = is_zero(sums[std::size_t(i)]);
      if (adding) sums[std::size_t(i)] += m(i, j);
      else sums[std::size_t(i)] -= m(i, j);
      zero_rows += int(is_zero(sums[std::size_t(i)])) - int(was_zero);
    }
    if (zero_rows) continue;
    Ring prod = sums[0];
    for (int i = 1; i < n; ++i) prod = prod * sums[std::size_t(i)];
    // (-1)^(n - |S|)
    if ((n - __builtin_popcountll(gray)) % 2) total -= prod;
    else total += prod;
  }
  return total;
}

/// Integer permanent: exact 64-bit row sums, products modulo several primes,
/// reconstruction by CRT against the product of absolute row sums.
BigInt permanent_integer(const IntMatrix& m);

/// Size limits; HUCKEL_MAX_SIZE raises every guard at once.
struct CostLimits {
  int perm_integer = 28;
  int perm_symbolic = 16;
  int symbolic_det = 25;
  int condense = 5;
  /// Largest n for random-point checks of the triangle conjecture.
  int specialized_n = 8;
  static CostLimits from_env();
};

MultiPoly permanent(const PolyMatrix& m, const CostLimits& limits = CostLimits::from_env());

}  // namespace huckel
