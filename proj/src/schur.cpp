#include "huckel/schur.hpp"

#include <algorithm>
#include <numeric>

namespace huckel {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

/// The variable v when p == v, otherwise nullopt.
std::optional<Var> as_variable(const MultiPoly& p) {
  if (p.size() != 1 || p.leading().coef != 1 || p.leading().mono.degree() != 1) return std::nullopt;
  for (int s = 0; s < kSlots; ++s) {
    if (p.leading().mono.at_slot(s)) return Var::from_slot(s);
  }
  return std::nullopt;
}

}  // namespace

PolyMatrix invert_T(int m, const MultiPoly& x, const MultiPoly& y) {
  if (m < 1) throw Error(Errc::BadRange, "closed-form inverse needs m >= 1");
  const Index size = 2 * m + 1;
  const MultiPoly xy = x * y;
  PolyMatrix k(size, size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) {
      if (i % 2 == 0 && j % 2 == 0) {
        k(i, j) = MultiPoly(long(parity_sign(m + (i + j) / 2)));
      } else if (i % 2 == 1 && j % 2 == 1) {
        k(i, j) = xy.scaled(parity_sign(m + 1 + (i + j) / 2));
      } else if (j > i) {
        k(i, j) = y.scaled(parity_sign((j - i - 1) / 2));
      } else {
        k(i, j) = x.scaled(parity_sign((i - j - 1) / 2));
      }
    }
  }
  const PolyMatrix t = block_T(m, x, y);
  PolyMatrix expect = PolyMatrix::Constant(size, size, MultiPoly{});
  for (Index i = 0; i < size; ++i) expect(i, i) = x + y;
  if (!equal(multiply(t, k), expect)) {
    throw Error(Errc::BlockMismatch, "closed-form inverse of T_" + std::to_string(m) + " fails the multiply-back check");
  }
  return k;
}

Rank1Factor coupling_rank1(int m, const MultiPoly& x, const MultiPoly& y) {
  const PolyMatrix r = to_poly(block_R(m));
  const PolyMatrix rt = r.transpose();
  return rank1_factor(multiply(multiply(rt, invert_T(m, x, y)), r), x + y);
}

SchurStep schur_det_step(const PolyMatrix& h, int m, const MultiPoly& x, const MultiPoly& y, Index borders) {
  const Index size = h.rows();
  const Index bs = 2 * m + 1;
  const Index rest = size - bs;
  const Index coupled = 2 * m - 1;
  if (m < 1 || rest < borders + coupled) throw Error(Errc::BlockMismatch, "matrix too small for block T_" + std::to_string(m));
  if (!equal<MultiPoly>(h.bottomRightCorner(bs, bs), block_T(m, x, y))) {
    throw Error(Errc::BlockMismatch, "trailing block is not T_" + std::to_string(m));
  }
  const auto yv = as_variable(y);
  if (!yv) throw Error(Errc::StrategyPrecondition, "condensation needs a symbolic y parameter");

  const MultiPoly s = x + y;
  const PolyMatrix a = h.topLeftCorner(rest, rest);
  const PolyMatrix n = multiply<MultiPoly>(multiply<MultiPoly>(h.topRightCorner(rest, bs), invert_T(m, x, y)),
                                           h.bottomLeftCorner(bs, rest));

  // The Hueckel rows feeding T_m carry the rank-one part sigma*x*y*u*u^T.
  const Rank1Factor f = coupling_rank1(m, x, y);
  const MultiPoly sx = f.num == x * y ? x : -x;
  DenseVector<MultiPoly> p = DenseVector<MultiPoly>::Constant(rest, MultiPoly{});
  DenseVector<MultiPoly> q = p;
  Index star = -1;
  for (Index a_ = 0; a_ < coupled; ++a_) {
    const int u = f.u[std::size_t(a_)];
    if (!u) continue;
    const Index idx = rest - coupled + a_;
    p(idx) = y.scaled(u);
    q(idx) = sx.scaled(u);
    if (star < 0) star = idx;
  }
  // Earlier borders: read the factor off N modulo s, i.e. with y = -x.
  const MultiPoly neg_x = -x;
  const MultiPoly q_star = q(star).substitute(*yv, neg_x);
  const MultiPoly p_star = p(star).substitute(*yv, neg_x);
  for (Index i = 0; i < borders; ++i) {
    p(i) = exact_div(n(i, star).substitute(*yv, neg_x), q_star);
    q(i) = exact_div(n(star, i).substitute(*yv, neg_x), p_star);
  }

  PolyMatrix inner(rest, rest);
  for (Index i = 0; i < rest; ++i) {
    for (Index j = 0; j < rest; ++j) {
      MultiPoly w = n(i, j) - p(i) * q(j);
      inner(i, j) = w.is_zero() ? a(i, j) : a(i, j) - exact_div(w, s);
    }
  }
  SchurStep out;
  bool any = false;
  for (Index i = 0; i < rest; ++i) any = any || !p(i).is_zero() || !q(i).is_zero();
  if (!any) {
    out.reduced = std::move(inner);
    return out;
  }
  out.border_added = true;
  out.reduced = PolyMatrix(rest + 1, rest + 1);
  out.reduced(0, 0) = s;
  for (Index i = 0; i < rest; ++i) {
    out.reduced(0, i + 1) = q(i);
    out.reduced(i + 1, 0) = p(i);
  }
  out.reduced.bottomRightCorner(rest, rest) = inner;
  return out;
}

bool equal_up_to_signed_permutation(const PolyMatrix& a, const PolyMatrix& b) {
  const Index n = a.rows();
  if (n != b.rows() || n != a.cols() || n != b.cols()) return false;
  if (n > 8) throw Error(Errc::TooLarge, "signed permutation search is limited to size 8");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool diag = true;
    for (Index i = 0; i < n && diag; ++i) diag = a(perm[std::size_t(i)], perm[std::size_t(i)]) == b(i, i);
    if (!diag) continue;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto sign = [&](Index i) { return i == 0 || !(mask >> (i - 1) & 1) ? 1 : -1; };
      bool ok = true;
      for (Index i = 0; i < n && ok; ++i) {
        for (Index j = 0; j < n && ok; ++j) {
          const MultiPoly& e = a(perm[std::size_t(i)], perm[std::size_t(j)]);
          ok = (sign(i) * sign(j) > 0 ? e : -e) == b(i, j);
        }
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

CondensationTrace condense(int n, const BoundaryParams& params, const CostLimits& limits) {
  if (n < 1) throw Error(Errc::BadRange, "condensation needs n >= 1");
  if (n > limits.condense) throw Error(Errc::CostGuard, "condensation limited to n <= " + std::to_string(limits.condense));
  CondensationTrace trace;
  PolyMatrix cur = build_huckel(0, n, params);
  Index borders = 0;
  for (int m = n; m >= 1; --m) {
    SchurStep step = schur_det_step(cur, m, params.x(m), params.y(m), borders);
    cur = std::move(step.reduced);
    if (step.border_added) ++borders;
    trace.steps.push_back({m, step.border_added, cur.rows()});
  }
  for (Index i = 0; i < cur.rows(); ++i) {
    for (Index j = 0; j < cur.cols(); ++j) cur(i, j).with_varcount(n + 1);
  }
  trace.final_matrix = cur;
  trace.matches_reduced = equal_up_to_signed_permutation(cur, build_reduced(0, n, params));
  return trace;
}

}  // namespace huckel
