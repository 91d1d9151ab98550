#include "huckel/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "huckel/schur.hpp"

namespace huckel {

std::string_view mode_name(Mode m) { return m == Mode::Symbolic ? "symbolic" : "specialized"; }
std::string_view param_mode_name(ParamMode p) { return p == ParamMode::Distinct ? "distinct" : "bivariate"; }

bool VerifyReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

Json report_json(const VerifyReport& r, bool timing) {
  Json method = {{"kind", mode_name(r.mode)}, {"lhs", r.lhs_method}, {"rhs", r.rhs_method}};
  if (r.seed) method["seed"] = *r.seed;
  if (!r.points.empty()) {
    Json pts = Json::array();
    for (const auto& p : r.points) {
      Json o = Json::object();
      for (const auto& [name, v] : p) o[name] = v.str();
      pts.push_back(std::move(o));
    }
    method["points"] = std::move(pts);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"pass", c.pass}};
    if (!c.lhs.empty()) j["lhs"] = c.lhs;
    if (!c.rhs.empty()) j["rhs"] = c.rhs;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  Json out = {{"schema", kSchemaVersion},
              {"id", r.id},
              {"instance", {{"k", r.k}, {"n", r.n}, {"params", r.params}}},
              {"method", std::move(method)},
              {"checks", std::move(checks)},
              {"verdict", r.pass() ? "pass" : "fail"}};
  if (timing) out["elapsed_s"] = r.elapsed;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BoundaryParams symbolic_params(ParamMode p) {
  return p == ParamMode::Distinct ? BoundaryParams::distinct() : BoundaryParams::uniform();
}

Check compare(std::string name, const MultiPoly& lhs, const MultiPoly& rhs) {
  return {std::move(name), lhs == rhs, lhs.to_string(), rhs.to_string(), {}};
}

Check compare(std::string name, const BigInt& lhs, const BigInt& rhs) {
  return {std::move(name), lhs == rhs, lhs.str(), rhs.str(), {}};
}

/// x_i, y_i drawn uniformly from [-10^6, 10^6] for rows k..n.
struct RandomRows {
  std::vector<MultiPoly> xs, ys;
  SamplePoint point;
};

RandomRows draw_rows(std::mt19937_64& rng, int k, int n, ParamMode p) {
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  RandomRows r;
  r.xs.assign(std::size_t(n + 1), MultiPoly{});
  r.ys.assign(std::size_t(n + 1), MultiPoly{});
  if (p == ParamMode::Bivariate) {
    const long x = dist(rng), y = dist(rng);
    for (int i = k; i <= n; ++i) {
      r.xs[std::size_t(i)] = x;
      r.ys[std::size_t(i)] = y;
    }
    r.point = {{"x", x}, {"y", y}};
    return r;
  }
  for (int i = k; i <= n; ++i) {
    const long x = dist(rng), y = dist(rng);
    r.xs[std::size_t(i)] = x;
    r.ys[std::size_t(i)] = y;
    r.point.emplace_back("x" + std::to_string(i), x);
    r.point.emplace_back("y" + std::to_string(i), y);
  }
  return r;
}

std::string zippel_note(int k, int n, int points) {
  // The difference of both sides has total degree at most 2(n+1-k).
  const double d = 2.0 * (n + 1 - k);
  std::ostringstream s;
  s << "random evaluation over 2000001 values per variable; false pass probability <= ("
    << int(d) << "/2000001)^" << points << " = " << std::pow(d / 2000001.0, points);
  return s.str();
}

/// Shared driver for the two binomial-matrix conjectures.
VerifyReport verify_reduced(const char* id, int k, int n, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  if (k < 0 || n < k) throw Error(Errc::BadRange, "need 0 <= k <= n");
  VerifyReport r;
  r.id = id;
  r.k = k;
  r.n = n;
  r.params = std::string(param_mode_name(opt.params));
  r.mode = opt.mode;
  if (opt.mode == Mode::Symbolic) {
    const BoundaryParams params = symbolic_params(opt.params);
    const PolyMatrix h = build_huckel(k, n, params);
    const DetStrategy lhs_s = opt.params == ParamMode::Bivariate ? DetStrategy::BivariateInterpolation
                                                                 : DetStrategy::MultivariateInterpolation;
    r.lhs_method = std::string(strategy_name(lhs_s));
    r.rhs_method = std::string(strategy_name(DetStrategy::FractionFree));
    DetOptions dopt;
    if (lhs_s == DetStrategy::BivariateInterpolation) dopt.degree = n + 1 - k;
    const MultiPoly lhs = det(h, lhs_s, dopt);
    const MultiPoly rhs = det(build_reduced(k, n, params), DetStrategy::FractionFree);
    r.checks.push_back(compare("det H = det binomial", lhs, rhs));
  } else {
    std::mt19937_64 rng(opt.seed);
    r.seed = opt.seed;
    r.lhs_method = "integer " + std::string(strategy_name(DetStrategy::FractionFree));
    r.rhs_method = r.lhs_method;
    for (int p = 0; p < opt.points; ++p) {
      const RandomRows rows = draw_rows(rng, k, n, opt.params);
      const auto params = BoundaryParams::per_row(rows.xs, rows.ys);
      const BigInt lhs = det_integer(to_integer(build_huckel(k, n, params)));
      const BigInt rhs = det_integer(to_integer(build_reduced(k, n, params)));
      r.points.push_back(rows.point);
      r.checks.push_back(compare("point " + std::to_string(p), lhs, rhs));
    }
    if (!r.checks.empty()) r.checks.back().detail = zippel_note(k, n, opt.points);
  }
  r.elapsed = seconds_since(t0);
  return r;
}

}  // namespace

VerifyReport verify_conjecture1(int n, const VerifyOptions& opt) {
  if (n < 0) throw Error(Errc::BadRange, "n must be nonnegative");
  if (opt.mode == Mode::Symbolic && (n + 1) * (n + 1) > opt.limits.symbolic_det) {
    throw Error(Errc::CostGuard, "symbolic mode limited to " + std::to_string(opt.limits.symbolic_det) + " vertices");
  }
  if (opt.mode == Mode::Specialized && n > opt.limits.specialized_n) {
    throw Error(Errc::CostGuard, "specialized mode limited to n <= " + std::to_string(opt.limits.specialized_n));
  }
  VerifyReport r = verify_reduced("conj1", 0, n, opt);
  if (opt.mode == Mode::Specialized) {
    // With y = 1: det H_n(x, 1) = det(diag(x) Q_n + I), the cleared form
    // of (x_0...x_n) det(Q_n + diag(1/x_i)).
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    RandomRows rows = draw_rows(rng, 0, n, ParamMode::Distinct);
    SamplePoint pt;
    for (int i = 0; i <= n; ++i) {
      rows.ys[std::size_t(i)] = 1;
      pt.emplace_back("x" + std::to_string(i), rows.xs[std::size_t(i)].constant_value());
    }
    const BigInt lhs = det_integer(to_integer(build_huckel(0, n, BoundaryParams::per_row(rows.xs, rows.ys))));
    IntMatrix q = build_pascal(PascalKind::Symmetric, n);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) q(i, j) *= rows.xs[std::size_t(i)].constant_value();
      q(i, i) += 1;
    }
    r.points.push_back(pt);
    Check c = compare("y = 1: det H = det(diag(x) Q + I)", lhs, det_integer(q));
    r.checks.push_back(std::move(c));
  }
  return r;
}

VerifyReport verify_conjecture2(int k, int n, const VerifyOptions& opt) {
  if (opt.mode == Mode::Specialized && (n + 1) * (n + 1) - k * k > 400) {
    throw Error(Errc::CostGuard, "specialized mode limited to 400 vertices");
  }
  return verify_reduced("conj2", k, n, opt);
}

VerifyReport verify_conjecture3(int k, int n, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  if (k < 0 || n < k) throw Error(Errc::BadRange, "need 0 <= k <= n");
  const int size = (n + 1) * (n + 1) - k * k;
  VerifyReport r;
  r.id = "conj3";
  r.k = k;
  r.n = n;
  r.params = std::string(param_mode_name(opt.params));
  r.mode = opt.mode;
  if (opt.mode == Mode::Symbolic) {
    if (size > opt.limits.perm_symbolic) {
      throw Error(Errc::CostGuard, "symbolic permanent limited to size " + std::to_string(opt.limits.perm_symbolic));
    }
    const PolyMatrix h = build_huckel(k, n, symbolic_params(opt.params));
    r.lhs_method = "ryser";
    r.rhs_method = std::string(strategy_name(DetStrategy::MultivariateInterpolation));
    r.checks.push_back(compare("perm H = det H", permanent(h, opt.limits), det(h, DetStrategy::MultivariateInterpolation)));
    if (size <= 9) {
      long even = 0, odd = 0;
      for_each_supported_permutation<MultiPoly>(h, [&](const std::vector<int>&, int sign, const MultiPoly&) {
        (sign > 0 ? even : odd) += 1;
      });
      r.checks.push_back({"supported permutations are even", odd == 0, std::to_string(odd), "0",
                          std::to_string(even) + " even, " + std::to_string(odd) + " odd"});
    }
  } else {
    if (size > opt.limits.perm_integer) {
      throw Error(Errc::CostGuard, "integer permanent limited to size " + std::to_string(opt.limits.perm_integer));
    }
    std::mt19937_64 rng(opt.seed);
    r.seed = opt.seed;
    r.lhs_method = "integer ryser (multi-modular)";
    r.rhs_method = "integer " + std::string(strategy_name(DetStrategy::FractionFree));
    for (int p = 0; p < opt.points; ++p) {
      const RandomRows rows = draw_rows(rng, k, n, opt.params);
      const IntMatrix h = to_integer(build_huckel(k, n, BoundaryParams::per_row(rows.xs, rows.ys)));
      r.points.push_back(rows.point);
      r.checks.push_back(compare("point " + std::to_string(p), permanent_integer(h), det_integer(h)));
    }
  }
  r.elapsed = seconds_since(t0);
  return r;
}

MultiPoly huckel_bivariate_det(int n) {
  DetOptions opt;
  opt.degree = n + 1;
  return det(build_huckel(0, n, BoundaryParams::uniform()), DetStrategy::BivariateInterpolation, opt);
}

Check check_trapezium_recursion(int k, int n) {
  if (k < 0 || n <= k) throw Error(Errc::BadRange, "recursion needs 0 <= k < n");
  const TriangleGraph g(k, n);
  const PolyMatrix h = build_huckel(k, n);
  const PolyMatrix prime = delete_rows_cols(h, {g.index(n, 0), g.index(n, 2 * n)});
  const MultiPoly lhs = det(h, DetStrategy::MultivariateInterpolation);
  const MultiPoly rhs = (MultiPoly::x(n) + MultiPoly::y(n)) * det(build_huckel(k, n - 1), DetStrategy::MultivariateInterpolation) -
                        MultiPoly::x(n) * MultiPoly::y(n) * det(prime, DetStrategy::MultivariateInterpolation);
  return compare("recursion (" + std::to_string(k) + "," + std::to_string(n) + ")", lhs, rhs);
}

VerifyReport verify_props(int n, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  if (n < 0) throw Error(Errc::BadRange, "n must be nonnegative");
  if (n > 6 && n > opt.limits.specialized_n) throw Error(Errc::CostGuard, "property checks limited to n <= 6");
  VerifyReport r;
  r.id = "props";
  r.n = n;
  r.params = "bivariate";
  r.lhs_method = std::string(strategy_name(DetStrategy::BivariateInterpolation));
  r.rhs_method = "charpoly (" + std::string(strategy_name(DetStrategy::FractionFree)) + ")";
  const MultiPoly p = huckel_bivariate_det(n);
  const PropertyFlags f = poly_properties(p, n + 1);
  r.checks.push_back({"homogeneous of degree n+1", f.homogeneous, p.to_string(), {}, {}});
  r.checks.push_back({"palindromic", f.palindromic, {}, {}, {}});
  r.checks.push_back({"unit extreme coefficients", f.monic_extremes, {}, {}, {}});

  if (n <= 4) {
    // t enters as the variable z.
    std::vector<MultiPoly> xs(std::size_t(n + 1), MultiPoly::z() * MultiPoly::x(0));
    std::vector<MultiPoly> ys(std::size_t(n + 1), MultiPoly::z() * MultiPoly::y(0));
    const MultiPoly scaled = det(build_huckel(0, n, BoundaryParams::per_row(xs, ys)), DetStrategy::MultivariateInterpolation);
    r.checks.push_back(compare("det H(tx, ty) = t^(n+1) det H(x, y)", scaled, MultiPoly::z().pow(unsigned(n + 1)) * p));
  }

  const auto lhs = bivariate_coefficients(p, n + 1);
  const auto rhs = univariate_coefficients(charpoly(build_pascal(PascalKind::Symmetric, n)), Var::z());
  auto join = [](const std::vector<BigInt>& v) {
    std::string s;
    for (const auto& c : v) s += (s.empty() ? "" : ",") + c.str();
    return s;
  };
  r.checks.push_back({"coefficients = charpoly(Q_n)", lhs == rhs, join(lhs), join(rhs), {}});

  for (auto [k, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) r.checks.push_back(check_trapezium_recursion(k, m));
  r.elapsed = seconds_since(t0);
  return r;
}

VerifyReport verify_rank1_coupling(int m) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.id = "lemma-rank1";
  r.n = m;
  r.params = "distinct";
  r.lhs_method = "R^T adj(T) R";
  r.rhs_method = "sign x y u u^T";
  const MultiPoly x = MultiPoly::x(m), y = MultiPoly::y(m);
  const Rank1Factor f = coupling_rank1(m, x, y);
  const auto u = alternating_u(m);
  std::string us, fs;
  for (std::size_t i = 0; i < u.size(); ++i) {
    us += (i ? "," : "") + std::to_string(u[i]);
    fs += (i ? "," : "") + std::to_string(f.u[i]);
  }
  r.checks.push_back({"u vector", f.u == u, fs, us, {}});
  const MultiPoly expect = m % 2 ? -(x * y) : x * y;
  r.checks.push_back(compare("numerator (-1)^m x y", f.num, expect));
  r.checks.push_back(compare("denominator x + y", f.den, x + y));

  // Bloch point x = z^-1, y = z: x y = 1.
  const Assignment<CycInt> bloch{{Var::x(m), CycInt::zeta_pow(-1)}, {Var::y(m), CycInt::zeta()}};
  const CycMatrix k = specialize<CycInt>(invert_T(m), bloch);
  bool toeplitz = true;
  for (Index i = 1; i < k.rows(); ++i) {
    for (Index j = 1; j < k.cols(); ++j) toeplitz = toeplitz && k(i, j) == k(i - 1, j - 1);
  }
  r.checks.push_back({"adj(T) is Toeplitz at x y = 1", toeplitz, {}, {}, {}});
  r.elapsed = seconds_since(t0);
  return r;
}

VerifyReport verify_bordered(int n) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.id = "bordered";
  r.n = n;
  r.params = "distinct";
  r.lhs_method = std::string(strategy_name(DetStrategy::FractionFree));
  r.rhs_method = std::string(strategy_name(DetStrategy::MultivariateInterpolation));
  r.checks.push_back(compare("det bordered = det H_n", det(build_bordered(n), DetStrategy::FractionFree),
                             det(build_huckel(0, n), DetStrategy::MultivariateInterpolation)));
  r.elapsed = seconds_since(t0);
  return r;
}

VerifyReport verify_condense(int n, const VerifyOptions& opt) {
  const auto t0 = Clock::now();
  VerifyReport r;
  r.id = "condense";
  r.n = n;
  r.params = std::string(param_mode_name(opt.params));
  r.lhs_method = "condensation, " + std::string(strategy_name(DetStrategy::FractionFree));
  r.rhs_method = std::string(strategy_name(DetStrategy::MultivariateInterpolation));
  const BoundaryParams params = symbolic_params(opt.params);
  const CondensationTrace trace = condense(n, params, opt.limits);
  const MultiPoly final_det = det(trace.final_matrix, DetStrategy::FractionFree);
  r.checks.push_back(compare("det final = det H_n", final_det, det(build_huckel(0, n, params), DetStrategy::MultivariateInterpolation)));
  r.checks.push_back(compare("det final = det binomial", final_det, det(build_reduced(0, n, params), DetStrategy::FractionFree)));
  Check info{"size n+1", trace.final_matrix.rows() == n + 1, std::to_string(trace.final_matrix.rows()), std::to_string(n + 1),
             trace.matches_reduced ? "entrywise equal to the binomial matrix up to signed permutation"
                                   : "entries differ from the binomial matrix; determinants compared only"};
  r.checks.push_back(std::move(info));
  r.elapsed = seconds_since(t0);
  return r;
}

std::vector<VerifyReport> run_parallel(const std::vector<std::function<VerifyReport()>>& tasks, int jobs) {
  std::vector<VerifyReport> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int count = std::max(1, std::min<int>(jobs, int(tasks.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

ThetaRow theta_row(int n) {
  ThetaRow row;
  row.n = n;
  row.a = formula_A(std::max(n, 1));
  row.aht = formula_AHT(std::max(n, 1));
  const MultiPoly p = huckel_bivariate_det(n);
  for (int j = 0; j < 4; ++j) {
    row.theta[std::size_t(j)] = poly_eval<CycInt>(p, {{Var::x(0), CycInt::zeta_pow(-j)}, {Var::y(0), CycInt::zeta_pow(j)}});
  }
  // exp(-+ i pi/4) = (1 -+ i)/sqrt2, so det H_n(pi/4) = g / sqrt2^(n+1).
  const GaussInt g = poly_eval<GaussInt>(p, {{Var::x(0), GaussInt(1, -1)}, {Var::y(0), GaussInt(1, 1)}});
  if (!g.im().is_zero()) throw Error(Errc::NotDivisible, "det H_n(pi/4) is not real");
  row.pi4_sqrt2 = (n + 1) % 2 == 1;
  const int half = row.pi4_sqrt2 ? (n + 2) / 2 : (n + 1) / 2;
  row.pi4 = exact_div(g.re(), BigInt(1) << half);
  if ((n + 1) % 2 == 0) row.mitra = mitra_estimate(n + 1);
  return row;
}

}  // namespace huckel
