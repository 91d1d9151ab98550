#include "huckel/matrix.hpp"

#include <algorithm>

namespace huckel {

IntMatrix to_integer(const PolyMatrix& m) {
  return map_entries<BigInt>(m, [](const MultiPoly& p) { return p.constant_value(); });
}

PolyMatrix to_poly(const IntMatrix& m) {
  return map_entries<MultiPoly>(m, [](const BigInt& v) { return MultiPoly(v); });
}

std::vector<Var> matrix_variables(const PolyMatrix& m) {
  std::vector<bool> used(kSlots, false);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (const auto& t : m(i, j).terms()) {
        for (int s = 0; s < kSlots; ++s) used[std::size_t(s)] = used[std::size_t(s)] || t.mono.at_slot(s) != 0;
      }
    }
  }
  std::vector<Var> out;
  for (int s = 0; s < kSlots; ++s) {
    if (used[std::size_t(s)]) out.push_back(Var::from_slot(s));
  }
  return out;
}

std::string to_grid(const PolyMatrix& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(std::size_t(m.cols()), 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).is_zero() ? "." : m(i, j).to_string());
      width[std::size_t(j)] = std::max(width[std::size_t(j)], cells.back().size());
    }
  }
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto& c = cells[std::size_t(i * m.cols() + j)];
      out += std::string(width[std::size_t(j)] - c.size() + (j ? 2 : 0), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace huckel
