#include "huckel/builders.hpp"

#include <algorithm>

#include "huckel/error.hpp"

namespace huckel {

namespace {

void check_rows(int k, int n) {
  if (k < 0 || n < k) {
    throw Error(Errc::BadRange, "need 0 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (n >= kMaxPairs) throw Error(Errc::BadRange, "row index " + std::to_string(n) + " exceeds supported pairs");
}

}  // namespace

TriangleGraph::TriangleGraph(int k, int n) : k_(k), n_(n) {
  check_rows(k, n);
  for (int m = k; m <= n; ++m) {
    for (int p = 0; p <= 2 * m; ++p) vertices_.push_back({m, p});
  }
  for (int m = k; m <= n; ++m) {
    for (int p = 0; p < 2 * m; ++p) edges_.emplace_back(index(m, p), index(m, p + 1));
    if (m > k) {
      for (int j = 0; j < m; ++j) edges_.emplace_back(index(m - 1, 2 * j), index(m, 2 * j + 1));
    }
    slots_.push_back({m, true, index(m, 2 * m), index(m, 0)});
    slots_.push_back({m, false, index(m, 0), index(m, 2 * m)});
  }
}

std::vector<int> TriangleGraph::row_lengths() const {
  std::vector<int> out;
  for (int m = k_; m <= n_; ++m) out.push_back(2 * m + 1);
  return out;
}

std::vector<Index> TriangleGraph::neighbors(Index v) const {
  std::vector<Index> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int TriangleGraph::degree(Index v) const {
  int d = static_cast<int>(neighbors(v).size());
  const auto& vx = vertex(v);
  if (vx.row == 0) return d + 2;
  if (vx.pos == 0 || vx.pos == 2 * vx.row) d += 1;
  return d;
}

std::vector<Index> TriangleGraph::mirror() const {
  std::vector<Index> out(vertices_.size());
  for (Index v = 0; v < vertex_count(); ++v) {
    const auto& vx = vertex(v);
    out[std::size_t(v)] = index(vx.row, 2 * vx.row - vx.pos);
  }
  return out;
}

std::vector<Index> TriangleGraph::color_sorted_order() const {
  std::vector<Index> ends, inner, red;
  for (int m = k_; m <= n_; ++m) {
    ends.push_back(index(m, 0));
    if (m > 0) ends.push_back(index(m, 2 * m));
    for (int p = 1; p < 2 * m; ++p) (p % 2 ? red : inner).push_back(index(m, p));
  }
  ends.insert(ends.end(), inner.begin(), inner.end());
  ends.insert(ends.end(), red.begin(), red.end());
  return ends;
}

// ---------------------------------------------------------------------------

BoundaryParams BoundaryParams::distinct() { return {}; }

BoundaryParams BoundaryParams::uniform() {
  BoundaryParams p;
  p.kind_ = Kind::Uniform;
  return p;
}

BoundaryParams BoundaryParams::constant(const BigInt& x, const BigInt& y) {
  BoundaryParams p;
  p.kind_ = Kind::PerRow;
  p.xs_.assign(kMaxPairs, MultiPoly(x));
  p.ys_.assign(kMaxPairs, MultiPoly(y));
  return p;
}

BoundaryParams BoundaryParams::per_row(std::vector<MultiPoly> xs, std::vector<MultiPoly> ys) {
  BoundaryParams p;
  p.kind_ = Kind::PerRow;
  p.xs_ = std::move(xs);
  p.ys_ = std::move(ys);
  return p;
}

MultiPoly BoundaryParams::x(int row) const {
  switch (kind_) {
    case Kind::Distinct: return MultiPoly::x(row);
    case Kind::Uniform: return MultiPoly::x(0);
    case Kind::PerRow:
      if (row < 0 || std::size_t(row) >= xs_.size()) throw Error(Errc::BadRange, "no x value for row " + std::to_string(row));
      return xs_[std::size_t(row)];
  }
  return {};
}

MultiPoly BoundaryParams::y(int row) const {
  switch (kind_) {
    case Kind::Distinct: return MultiPoly::y(row);
    case Kind::Uniform: return MultiPoly::y(0);
    case Kind::PerRow:
      if (row < 0 || std::size_t(row) >= ys_.size()) throw Error(Errc::BadRange, "no y value for row " + std::to_string(row));
      return ys_[std::size_t(row)];
  }
  return {};
}

// ---------------------------------------------------------------------------

PolyMatrix block_T(int m, const MultiPoly& x, const MultiPoly& y) {
  if (m < 0) throw Error(Errc::BadRange, "negative block index");
  const Index size = 2 * m + 1;
  PolyMatrix t = PolyMatrix::Constant(size, size, MultiPoly{});
  for (Index i = 0; i + 1 < size; ++i) {
    t(i, i + 1) = 1;
    t(i + 1, i) = 1;
  }
  t(size - 1, 0) += x;
  t(0, size - 1) += y;
  return t;
}

IntMatrix block_R(int m) {
  if (m < 1) throw Error(Errc::BadRange, "R_m needs m >= 1");
  IntMatrix r = IntMatrix::Constant(2 * m + 1, 2 * m - 1, BigInt(0));
  for (int j = 0; j < m; ++j) r(2 * j + 1, 2 * j) = 1;
  return r;
}

PolyMatrix build_huckel(int k, int n, const BoundaryParams& params) {
  check_rows(k, n);
  const TriangleGraph g(k, n);
  const Index size = g.vertex_count();
  PolyMatrix h = PolyMatrix::Constant(size, size, MultiPoly{});
  for (const auto& [a, b] : g.edges()) {
    h(a, b) = 1;
    h(b, a) = 1;
  }
  for (const auto& s : g.slots()) h(s.from, s.to) += s.is_x ? params.x(s.row) : params.y(s.row);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) h(i, j).with_varcount(n + 1);
  }
  return h;
}

IntMatrix build_pascal(PascalKind kind, int n) {
  if (n < 0) throw Error(Errc::BadRange, "Pascal index must be nonnegative");
  IntMatrix p = IntMatrix::Constant(n + 1, n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      switch (kind) {
        case PascalKind::Lower: p(i, j) = binomial(i, j); break;
        case PascalKind::InverseLower: p(i, j) = ((i - j) % 2 ? -1 : 1) * binomial(i, j); break;
        case PascalKind::Symmetric: p(i, j) = binomial(i + j, j); break;
      }
    }
  }
  return p;
}

IntMatrix build_reversal(int n) {
  IntMatrix j = IntMatrix::Constant(n + 1, n + 1, BigInt(0));
  for (int i = 0; i <= n; ++i) j(i, n - i) = 1;
  return j;
}

PolyMatrix build_reduced(int k, int n, const BoundaryParams& params) {
  check_rows(k, n);
  const int size = n + 1 - k;
  PolyMatrix r(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j) {
        r(i, j) = params.x(n - i) + params.y(n - i);
      } else if (i < j) {
        const BigInt c = binomial(n - i, j - i);
        r(i, j) = params.y(n - i).scaled((j - i) % 2 ? BigInt(-c) : c);
      } else {
        r(i, j) = params.x(n - j).scaled(binomial(n - j, i - j));
      }
      r(i, j).with_varcount(n + 1);
    }
  }
  return r;
}

CycMatrix build_general_binomial(int m, int n, const CycInt& omega) {
  if (m < 0 || n < 0) throw Error(Errc::BadRange, "need m, n >= 0");
  CycMatrix g(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c <= n; ++c) {
      g(r, c) = CycInt(binomial(m + r + c, r));
      if (r == c) g(r, c) += omega;
    }
  }
  return g;
}

GaussMatrix build_general_binomial_gauss(int m, int n, const GaussInt& omega) {
  if (m < 0 || n < 0) throw Error(Errc::BadRange, "need m, n >= 0");
  GaussMatrix g(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c <= n; ++c) {
      g(r, c) = GaussInt(binomial(m + r + c, r));
      if (r == c) g(r, c) += omega;
    }
  }
  return g;
}

std::vector<int> alternating_u(int m) {
  std::vector<int> u(std::size_t(2 * m - 1), 0);
  for (int a = 0; 2 * a < 2 * m - 1; ++a) u[std::size_t(2 * a)] = a % 2 ? -1 : 1;
  return u;
}

PolyMatrix build_bordered(int n, const BoundaryParams& params) {
  if (n < 1) throw Error(Errc::BadRange, "bordered form needs n >= 1");
  check_rows(0, n);
  const PolyMatrix inner = build_huckel(0, n - 1, params);
  const Index size = inner.rows() + 1;
  PolyMatrix b = PolyMatrix::Constant(size, size, MultiPoly{});
  b.bottomRightCorner(inner.rows(), inner.cols()) = inner;
  b(0, 0) = params.x(n) + params.y(n);
  const auto u = alternating_u(n);
  const Index lead = Index(n - 1) * (n - 1);
  const MultiPoly row_coef = n % 2 ? -params.x(n) : params.x(n);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    b(0, 1 + lead + Index(a)) = row_coef.scaled(u[a]);
    b(1 + lead + Index(a), 0) = params.y(n).scaled(u[a]);
  }
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) b(i, j).with_varcount(n + 1);
  }
  return b;
}

int permutation_sign(const std::vector<Index>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = std::size_t(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

SymmetrizedForm build_symmetrized(int k, int n, const BoundaryParams& params) {
  const TriangleGraph g(k, n);
  const PolyMatrix h = build_huckel(k, n, params);
  const auto order = g.color_sorted_order();
  const auto mir = g.mirror();
  const Index size = h.rows();
  PolyMatrix s(size, size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = 0; j < size; ++j) s(i, j) = h(mir[std::size_t(order[std::size_t(i)])], order[std::size_t(j)]);
  }
  return {s, permutation_sign(mir), order};
}

}  // namespace huckel
