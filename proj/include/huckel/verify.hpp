#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "huckel/builders.hpp"
#include "huckel/formulas.hpp"
#include "huckel/linalg.hpp"
#include "huckel/serialize.hpp"

namespace huckel {

enum class Mode { Symbolic, Specialized };
enum class ParamMode { Distinct, Bivariate };

std::string_view mode_name(Mode m);
std::string_view param_mode_name(ParamMode p);

struct VerifyOptions {
  Mode mode = Mode::Symbolic;
  ParamMode params = ParamMode::Distinct;
  std::uint64_t seed = 1;
  int points = 5;
  CostLimits limits = CostLimits::from_env();
};

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// One random evaluation point: (variable name, value) pairs.
using SamplePoint = std::vector<std::pair<std::string, BigInt>>;

struct VerifyReport {
  std::string id;
  int k = 0;
  int n = 0;
  std::string params;
  Mode mode = Mode::Symbolic;
  std::optional<std::uint64_t> seed;
  std::vector<SamplePoint> points;
  std::string lhs_method;
  std::string rhs_method;
  std::vector<Check> checks;
  double elapsed = 0;

  bool pass() const;
};

Json report_json(const VerifyReport& r, bool timing);

/// det H_n against the binomial matrix.
VerifyReport verify_conjecture1(int n, const VerifyOptions& opt = {});
/// det H_{k,n} against the binomial matrix of size n+1-k.
VerifyReport verify_conjecture2(int k, int n, const VerifyOptions& opt = {});
/// Permanent against determinant; on sizes up to 9 also confirms that every
/// supported permutation is even.
VerifyReport verify_conjecture3(int k, int n, const VerifyOptions& opt = {});

/// Homogeneity, palindromy and unit extremes of det H_n(x, y); t-scaling for
/// n <= 4; coefficients against charpoly(Q_n); the trapezium recursion on
/// (1,2), (1,3), (2,3).
VerifyReport verify_props(int n, const VerifyOptions& opt = {});

/// det H_{k,n} = (x_n + y_n) det H_{k,n-1} - x_n y_n det H'_{k,n}.
Check check_trapezium_recursion(int k, int n);
/// Rank one coupling with the alternating u and sign (-1)^m, plus the
/// Toeplitz shape of adj(T_m) at x y = 1.
VerifyReport verify_rank1_coupling(int m);
/// Bordered matrix determinant against det H_n.
VerifyReport verify_bordered(int n);
/// Condensation to size n+1 against det H_n and the binomial matrix.
VerifyReport verify_condense(int n, const VerifyOptions& opt = {});

/// Runs independent tasks on `jobs` workers; results keep input order.
std::vector<VerifyReport> run_parallel(const std::vector<std::function<VerifyReport()>>& tasks, int jobs);

// ---------------------------------------------------------------------------

/// det H_n(x, y) with a single parameter pair.
MultiPoly huckel_bivariate_det(int n);

/// One row of the angle table. theta[j] is det H_n(j pi/6) for j = 0..3;
/// the pi/4 value is pi4 * sqrt(2)^(pi4_sqrt2 ? 1 : 0).
struct ThetaRow {
  int n = 0;
  BigInt a;
  BigInt aht;
  std::array<CycInt, 4> theta;
  BigInt pi4;
  bool pi4_sqrt2 = false;
  std::optional<double> mitra;
};

ThetaRow theta_row(int n);

}  // namespace huckel
