#pragma once

#include <vector>

#include "huckel/builders.hpp"
#include "huckel/linalg.hpp"

namespace huckel {

/// (x+y) T_m^-1 = adj(T_m) from its closed form. The result is multiplied
/// back against T_m before returning.
PolyMatrix invert_T(int m, const MultiPoly& x, const MultiPoly& y);
inline PolyMatrix invert_T(int m) { return invert_T(m, MultiPoly::x(m), MultiPoly::y(m)); }

/// R_m^T T_m^-1 R_m as (sign * x y / (x + y)) u u^T.
Rank1Factor coupling_rank1(int m, const MultiPoly& x, const MultiPoly& y);

struct SchurStep {
  /// Always 1: the bordering keeps the determinant unchanged.
  MultiPoly prefactor{1};
  PolyMatrix reduced;
  bool border_added = false;
};

/// Eliminates the trailing diagonal block T_m(x, y) of `h` by the Schur
/// complement and restores polynomial entries with one new leading border.
/// The first `borders` rows and columns of `h` are earlier borders; the
/// rest is Hueckel structure. det(reduced) == det(h).
SchurStep schur_det_step(const PolyMatrix& h, int m, const MultiPoly& x, const MultiPoly& y, Index borders);

struct CondensationTrace {
  struct Step {
    int block;
    bool border_added;
    Index size;
  };
  std::vector<Step> steps;
  PolyMatrix final_matrix;
  /// Entrywise agreement with the binomial matrix up to a simultaneous
  /// permutation and diagonal sign change.
  bool matches_reduced = false;
};

/// Condenses H_n down to size n+1. Only distinct or uniform symbolic
/// parameters are accepted.
CondensationTrace condense(int n, const BoundaryParams& params = BoundaryParams::distinct(),
                           const CostLimits& limits = CostLimits::from_env());

/// True when b = P^T D a D P for some permutation P and signs D.
bool equal_up_to_signed_permutation(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace huckel
