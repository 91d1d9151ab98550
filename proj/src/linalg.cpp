#include "huckel/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace huckel {

std::string_view strategy_name(DetStrategy s) {
  switch (s) {
    case DetStrategy::FractionFree: return "fraction-free-elimination";
    case DetStrategy::SparseMinor: return "sparse-minor-expansion";
    case DetStrategy::BivariateInterpolation: return "bivariate-interpolation";
    case DetStrategy::PermutationExpansion: return "permutation-expansion";
    case DetStrategy::MultivariateInterpolation: return "multivariate-interpolation";
    case DetStrategy::Auto: return "auto";
  }
  return "?";
}

DetStrategy parse_strategy(std::string_view name) {
  for (auto s : {DetStrategy::FractionFree, DetStrategy::SparseMinor, DetStrategy::BivariateInterpolation,
                 DetStrategy::PermutationExpansion, DetStrategy::MultivariateInterpolation, DetStrategy::Auto}) {
    if (strategy_name(s) == name) return s;
  }
  throw Error(Errc::Usage, "unknown strategy '" + std::string(name) + "'");
}

BigInt det_integer(const IntMatrix& m) { return bareiss_det<BigInt>(m); }

std::vector<BigInt> interpolate_nodes(const std::vector<BigInt>& values) {
  const std::size_t count = values.size();
  if (count == 0) return {};
  // Forward differences give the Newton form in the binomial basis C(t, k).
  std::vector<BigInt> diff = values;
  std::vector<BigInt> newton(count);
  for (std::size_t k = 0; k < count; ++k) {
    newton[k] = diff[0];
    for (std::size_t i = 0; i + 1 < count - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // C(t, k) * D! = (D!/k!) * t (t-1) ... (t-k+1)
  const std::size_t d = count - 1;
  const BigInt dfact = factorial(unsigned(d));
  std::vector<BigInt> acc(count, BigInt(0));
  std::vector<BigInt> falling{BigInt(1)};
  for (std::size_t k = 0; k < count; ++k) {
    if (!newton[k].is_zero()) {
      const BigInt scale = newton[k] * (dfact / factorial(unsigned(k)));
      for (std::size_t j = 0; j < falling.size(); ++j) acc[j] += scale * falling[j];
    }
    // falling *= (t - k)
    std::vector<BigInt> next(falling.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < falling.size(); ++j) {
      next[j + 1] += falling[j];
      next[j] -= falling[j] * long(k);
    }
    falling = std::move(next);
  }
  for (auto& c : acc) c = exact_div(c, dfact);
  return acc;
}

int det_degree_bound(const PolyMatrix& m, Var v) {
  int rows = 0, cols = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int best_r = 0, best_c = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      best_r = std::max(best_r, m(i, j).degree_in(v));
      best_c = std::max(best_c, m(j, i).degree_in(v));
    }
    rows += best_r;
    cols += best_c;
  }
  return std::min(rows, cols);
}

namespace {

bool all_constant(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_constant()) return false;
    }
  }
  return true;
}

int matrix_varcount(const PolyMatrix& m) {
  int v = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::max(v, m(i, j).varcount());
  }
  return v;
}

/// Entry terms flattened against a fixed variable list for fast repeated
/// integer evaluation.
class FastEvaluator {
 public:
  FastEvaluator(const PolyMatrix& m, const std::vector<Var>& vars) : rows_(m.rows()), cols_(m.cols()) {
    entries_.resize(std::size_t(rows_ * cols_));
    for (Eigen::Index i = 0; i < rows_; ++i) {
      for (Eigen::Index j = 0; j < cols_; ++j) {
        auto& e = entries_[std::size_t(i * cols_ + j)];
        for (const auto& t : m(i, j).terms()) {
          FlatTerm ft{t.coef, {}};
          for (std::size_t v = 0; v < vars.size(); ++v) {
            const unsigned p = t.mono.exponent(vars[v]);
            if (p) ft.powers.emplace_back(int(v), p);
          }
          e.push_back(std::move(ft));
        }
      }
    }
  }

  IntMatrix at(const std::vector<BigInt>& point) const {
    IntMatrix out(rows_, cols_);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      for (Eigen::Index j = 0; j < cols_; ++j) {
        BigInt s = 0;
        for (const auto& ft : entries_[std::size_t(i * cols_ + j)]) {
          BigInt t = ft.coef;
          for (const auto& [v, p] : ft.powers) t *= boost::multiprecision::pow(point[std::size_t(v)], p);
          s += t;
        }
        out(i, j) = std::move(s);
      }
    }
    return out;
  }

 private:
  struct FlatTerm {
    BigInt coef;
    std::vector<std::pair<int, unsigned>> powers;
  };
  Eigen::Index rows_, cols_;
  std::vector<std::vector<FlatTerm>> entries_;
};

MultiPoly det_bivariate(const PolyMatrix& m, const DetOptions& opt) {
  const auto vars = matrix_variables(m);
  std::optional<int> pair;
  for (const auto& v : vars) {
    if (v.kind == Var::Kind::Z || (pair && *pair != v.index)) {
      throw Error(Errc::StrategyPrecondition, "bivariate interpolation needs a single x/y pair");
    }
    pair = v.index;
  }
  const int idx = pair.value_or(0);
  const std::vector<Var> xy{Var::x(idx), Var::y(idx)};
  const FastEvaluator eval(m, xy);
  int degree = 0;
  if (opt.degree) {
    degree = *opt.degree;
  } else {
    // p(t, t) = t^d p(1, 1)
    const BigInt one = det_integer(eval.at({1, 1}));
    if (one.is_zero()) throw Error(Errc::StrategyPrecondition, "cannot infer the homogeneous degree; pass it");
    BigInt two = det_integer(eval.at({2, 2}));
    BigInt ratio = exact_div(two, one);
    while (ratio > 1) {
      if (ratio % 2 != 0) throw Error(Errc::StrategyPrecondition, "determinant is not homogeneous");
      ratio /= 2;
      ++degree;
    }
    if (ratio != 1) throw Error(Errc::StrategyPrecondition, "determinant is not homogeneous");
  }
  std::vector<BigInt> values;
  for (int t = 0; t <= degree; ++t) values.push_back(det_integer(eval.at({1, t})));
  const auto coeffs = interpolate_nodes(values);
  std::vector<Term> terms;
  for (int k = 0; k <= degree; ++k) {
    if (coeffs[std::size_t(k)].is_zero()) continue;
    Monomial mono;
    mono.set(xy[0], std::uint16_t(degree - k));
    mono.set(xy[1], std::uint16_t(k));
    terms.push_back({mono, coeffs[std::size_t(k)]});
  }
  MultiPoly out = MultiPoly::from_terms(std::move(terms), matrix_varcount(m));
  // One off-grid point guards the homogeneity assumption.
  const BigInt check = det_integer(eval.at({3, 5}));
  if (poly_eval<BigInt>(out, {{xy[0], BigInt(3)}, {xy[1], BigInt(5)}}) != check) {
    throw Error(Errc::StrategyPrecondition, "determinant is not homogeneous of degree " + std::to_string(degree));
  }
  return out;
}

MultiPoly det_multivariate(const PolyMatrix& m, const DetOptions& opt) {
  std::vector<Var> vars;
  std::vector<int> bound;
  for (const auto& v : matrix_variables(m)) {
    const int b = det_degree_bound(m, v);
    if (b == 0) continue;
    vars.push_back(v);
    bound.push_back(b);
  }
  std::size_t grid = 1;
  for (int b : bound) {
    grid *= std::size_t(b + 1);
    if (grid > opt.max_grid) throw Error(Errc::CostGuard, "interpolation grid exceeds " + std::to_string(opt.max_grid));
  }
  const FastEvaluator eval(m, vars);
  // Mixed radix, first variable fastest.
  std::vector<BigInt> data(grid);
  std::vector<BigInt> point(vars.size(), BigInt(0));
  for (std::size_t g = 0; g < grid; ++g) {
    std::size_t rest = g;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      point[v] = long(rest % std::size_t(bound[v] + 1));
      rest /= std::size_t(bound[v] + 1);
    }
    data[g] = det_integer(eval.at(point));
  }
  std::size_t stride = 1;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const std::size_t len = std::size_t(bound[v] + 1);
    for (std::size_t base = 0; base < grid; ++base) {
      if ((base / stride) % len != 0) continue;
      std::vector<BigInt> fiber(len);
      for (std::size_t t = 0; t < len; ++t) fiber[t] = data[base + t * stride];
      const auto c = interpolate_nodes(fiber);
      for (std::size_t t = 0; t < len; ++t) data[base + t * stride] = c[t];
    }
    stride *= len;
  }
  std::vector<Term> terms;
  for (std::size_t g = 0; g < grid; ++g) {
    if (data[g].is_zero()) continue;
    Monomial mono;
    std::size_t rest = g;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      mono.set(vars[v], std::uint16_t(rest % std::size_t(bound[v] + 1)));
      rest /= std::size_t(bound[v] + 1);
    }
    terms.push_back({mono, data[g]});
  }
  return MultiPoly::from_terms(std::move(terms), matrix_varcount(m));
}

}  // namespace

MultiPoly det(const PolyMatrix& m, DetStrategy s, const DetOptions& opt) {
  if (m.rows() != m.cols()) throw Error(Errc::BadRange, "determinant of a non-square matrix");
  MultiPoly out;
  switch (s) {
    case DetStrategy::Auto:
      if (all_constant(m)) {
        out = MultiPoly(det_integer(to_integer(m)));
      } else {
        out = det_multivariate(m, opt);
      }
      break;
    case DetStrategy::FractionFree: out = bareiss_det<MultiPoly>(m); break;
    case DetStrategy::SparseMinor: out = minor_expansion_det<MultiPoly>(m); break;
    case DetStrategy::PermutationExpansion: out = permutation_expansion_det<MultiPoly>(m); break;
    case DetStrategy::BivariateInterpolation: out = det_bivariate(m, opt); break;
    case DetStrategy::MultivariateInterpolation: out = det_multivariate(m, opt); break;
  }
  out.with_varcount(std::max(out.varcount(), matrix_varcount(m)));
  return out;
}

MultiPoly charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::BadRange, "charpoly of a non-square matrix");
  PolyMatrix a = to_poly(m);
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) += MultiPoly::z();
  return bareiss_det<MultiPoly>(a);
}

Rank1Factor rank1_factor(const PolyMatrix& scaled, const MultiPoly& den) {
  const Eigen::Index n = scaled.rows();
  if (n != scaled.cols()) throw Error(Errc::NotRankOne, "matrix is not square");
  if (den.is_zero()) throw Error(Errc::NotRankOne, "zero denominator");
  Eigen::Index p = 0;
  while (p < n && scaled(p, p).is_zero()) ++p;
  if (p == n) throw Error(Errc::NotRankOne, "no nonzero diagonal entry");
  Rank1Factor f{scaled(p, p), den, std::vector<int>(std::size_t(n), 0)};
  const MultiPoly neg = -f.num;
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& e = scaled(p, j);
    if (e.is_zero()) continue;
    if (e == f.num) f.u[std::size_t(j)] = 1;
    else if (e == neg) f.u[std::size_t(j)] = -1;
    else throw Error(Errc::NotRankOne, "entry is not a signed copy of the pivot");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const int s = f.u[std::size_t(i)] * f.u[std::size_t(j)];
      const bool ok = s == 0 ? scaled(i, j).is_zero() : scaled(i, j) == (s > 0 ? f.num : neg);
      if (!ok) throw Error(Errc::NotRankOne, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks rank one");
    }
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^63, generated once.
const std::vector<u64>& crt_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 c = (u64(1) << 63) - 25; out.size() < 24; c -= 2) {
      if (is_prime64(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

}  // namespace

BigInt permanent_integer(const IntMatrix& m) {
  const int n = int(m.rows());
  if (n != m.cols()) throw Error(Errc::BadRange, "permanent of a non-square matrix");
  if (n == 0) return 1;
  if (n > 62) throw Error(Errc::TooLarge, "integer permanent is limited to 62 columns");
  const BigInt limit = BigInt(1) << 61;
  BigInt bound = 1;
  std::vector<std::vector<std::pair<int, std::int64_t>>> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BigInt row_abs = 0;
    for (int j = 0; j < n; ++j) row_abs += abs(m(i, j));
    if (row_abs >= limit) return ryser_permanent<BigInt>(m);
    bound *= row_abs;
    for (int j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) cols[std::size_t(j)].emplace_back(i, m(i, j).convert_to<std::int64_t>());
    }
  }
  if (bound.is_zero()) return 0;
  // Enough primes that their product exceeds twice the bound.
  std::vector<u64> primes;
  BigInt modulus = 1;
  for (u64 p : crt_primes()) {
    if (modulus > 2 * bound) break;
    primes.push_back(p);
    modulus *= BigInt(p);
  }
  if (modulus <= 2 * bound) return ryser_permanent<BigInt>(m);

  const std::size_t np = primes.size();
  std::vector<std::int64_t> sums(std::size_t(n), 0);
  std::vector<u64> total(np, 0);
  int zero_rows = n;
  u64 gray = 0;
  for (u64 step = 1; step < (u64(1) << n); ++step) {
    const int j = __builtin_ctzll(step);
    const bool adding = !(gray >> j & 1);
    gray ^= u64(1) << j;
    for (const auto& [i, v] : cols[std::size_t(j)]) {
      auto& s = sums[std::size_t(i)];
      const bool was_zero = s == 0;
      s += adding ? v : -v;
      zero_rows += int(s == 0) - int(was_zero);
    }
    if (zero_rows) continue;
    const bool negative = (n - __builtin_popcountll(gray)) % 2;
    for (std::size_t k = 0; k < np; ++k) {
      const u64 p = primes[k];
      u64 prod = 1;
      for (int i = 0; i < n; ++i) {
        const std::int64_t s = sums[std::size_t(i)];
        prod = mulmod(prod, s < 0 ? p - u64(-s) : u64(s), p);
      }
      total[k] = negative ? (total[k] + p - prod) % p : (total[k] + prod) % p;
    }
  }
  // Garner-free CRT: accumulate x mod (p_0 ... p_k).
  BigInt x = BigInt(total[0]), mod = BigInt(primes[0]);
  for (std::size_t k = 1; k < np; ++k) {
    const u64 p = primes[k];
    const u64 xm = u64(BigInt(x % BigInt(p)).convert_to<unsigned long long>());
    const u64 mm = u64(BigInt(mod % BigInt(p)).convert_to<unsigned long long>());
    const u64 diff = (total[k] + p - xm) % p;
    const u64 t = mulmod(diff, powmod(mm, p - 2, p), p);
    x += mod * BigInt(t);
    mod *= BigInt(p);
  }
  if (x > mod / 2) x -= mod;
  return x;
}

CostLimits CostLimits::from_env() {
  CostLimits c;
  if (const char* env = std::getenv("HUCKEL_MAX_SIZE")) {
    const int v = std::atoi(env);
    if (v > 0) c.perm_integer = c.perm_symbolic = c.symbolic_det = c.condense = c.specialized_n = v;
  }
  return c;
}

MultiPoly permanent(const PolyMatrix& m, const CostLimits& limits) {
  const int n = int(m.rows());
  if (all_constant(m)) {
    if (n > limits.perm_integer) throw Error(Errc::TooLarge, "integer permanent above size " + std::to_string(limits.perm_integer));
    return MultiPoly(permanent_integer(to_integer(m))).with_varcount(matrix_varcount(m));
  }
  if (n > limits.perm_symbolic) throw Error(Errc::TooLarge, "symbolic permanent above size " + std::to_string(limits.perm_symbolic));
  MultiPoly p = ryser_permanent<MultiPoly>(m);
  p.with_varcount(std::max(p.varcount(), matrix_varcount(m)));
  return p;
}

}  // namespace huckel
