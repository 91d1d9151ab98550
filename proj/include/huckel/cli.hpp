#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "huckel/linalg.hpp"
#include "huckel/verify.hpp"

namespace huckel {

/// Which matrix the det/perm/build commands operate on.
struct MatrixSpec {
  std::string family = "huckel";  // huckel|reduced|bordered|pascal|pascal-lower|pascal-inverse|symmetrized
  int k = 0;
  int n = 0;
  /// symbolic parameter pattern when no constants are given
  ParamMode params = ParamMode::Distinct;
  std::optional<long> x, y;
};

struct RunConfig {
  std::string subcommand;
  std::string target;
  MatrixSpec matrix;
  int n = 0;
  int k = 0;
  std::vector<int> box;
  Mode mode = Mode::Symbolic;
  ParamMode params = ParamMode::Distinct;
  std::uint64_t seed = 1;
  std::optional<int> points;
  DetStrategy strategy = DetStrategy::Auto;
  std::optional<std::string> output;
  bool timing = false;
  bool trace = false;
  bool table = false;
  std::string predict_case;
  int max_n = 6;
  int jobs = 1;
  int verbosity = 0;
};

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
/// input error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run_main(int argc, char** argv);

PolyMatrix build_matrix(const MatrixSpec& spec);

}  // namespace huckel
