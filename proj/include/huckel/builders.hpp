#pragma once

#include <utility>
#include <vector>

#include "huckel/matrix.hpp"

namespace huckel {

using Index = Eigen::Index;

enum class Color { Blue, Red };

/// Honeycomb triangle (k = 0) or trapezium with zig-zag rows k..n.
///
/// Row m holds 2m+1 atoms at positions 0..2m; vertices are numbered row by
/// row from the apex down, left to right inside a row. Even positions are
/// blue, odd positions red. Edges join neighbours inside a row, and the odd
/// position 2j+1 of row m to position 2j of row m-1. Each row carries two
/// boundary slots: x_m at matrix entry (2m -> 0) and y_m at (0 -> 2m) of its
/// diagonal block; row 0 collapses both onto the apex as x_0 + y_0.
class TriangleGraph {
 public:
  struct Vertex {
    int row;
    int pos;
  };
  struct BoundarySlot {
    int row;
    bool is_x;
    Index from;
    Index to;
  };

  TriangleGraph(int k, int n);

  int first_row() const { return k_; }
  int last_row() const { return n_; }
  Index vertex_count() const { return static_cast<Index>(vertices_.size()); }
  std::vector<int> row_lengths() const;

  /// Offset of row m's first vertex.
  Index row_offset(int m) const { return Index(m) * m - Index(k_) * k_; }
  Index index(int row, int pos) const { return row_offset(row) + pos; }
  const Vertex& vertex(Index v) const { return vertices_[std::size_t(v)]; }
  Color color(Index v) const { return vertex(v).pos % 2 ? Color::Red : Color::Blue; }

  const std::vector<std::pair<Index, Index>>& edges() const { return edges_; }
  const std::vector<BoundarySlot>& slots() const { return slots_; }
  std::vector<Index> neighbors(Index v) const;

  /// Graph degree plus boundary slots; x_m is charged to the left end of
  /// row m and y_m to the right end.
  int degree(Index v) const;

  /// Left-right reflection of the graph, as a vertex map.
  std::vector<Index> mirror() const;
  /// Blue row ends (apex, then left/right end of each row), inner blue
  /// vertices, then red vertices.
  std::vector<Index> color_sorted_order() const;

 private:
  int k_, n_;
  std::vector<Vertex> vertices_;
  std::vector<std::pair<Index, Index>> edges_;
  std::vector<BoundarySlot> slots_;
};

/// Values placed in the boundary slots of each row.
class BoundaryParams {
 public:
  /// x_m, y_m distinct symbols per row.
  static BoundaryParams distinct();
  /// Every row shares the pair x = x0, y = y0.
  static BoundaryParams uniform();
  static BoundaryParams constant(const BigInt& x, const BigInt& y);
  /// Row m takes xs[m], ys[m].
  static BoundaryParams per_row(std::vector<MultiPoly> xs, std::vector<MultiPoly> ys);

  MultiPoly x(int row) const;
  MultiPoly y(int row) const;

 private:
  enum class Kind { Distinct, Uniform, PerRow } kind_ = Kind::Distinct;
  std::vector<MultiPoly> xs_, ys_;
};

/// Diagonal block T_m of size 2m+1 (T_0 = x_0 + y_0).
PolyMatrix block_T(int m, const MultiPoly& x, const MultiPoly& y);
/// Coupling block R_m of size (2m+1) x (2m-1).
IntMatrix block_R(int m);

/// Hueckel matrix H_{k,n}; k = 0 gives the triangle H_n.
PolyMatrix build_huckel(int k, int n, const BoundaryParams& params = BoundaryParams::distinct());

enum class PascalKind { Lower, InverseLower, Symmetric };
/// P_n, P_n^-1 or Q_n = P_n P_n^T, each of size n+1.
IntMatrix build_pascal(PascalKind kind, int n);
/// Reversal J_n of size n+1.
IntMatrix build_reversal(int n);

/// Binomial matrix of size n+1-k whose determinant matches H_{k,n}.
/// Row i belongs to row index n-i: diagonal x_{n-i} + y_{n-i}, above the
/// diagonal (-1)^(j-i) C(n-i, j-i) y_{n-i}, below C(n-j, i-j) x_{n-j}.
PolyMatrix build_reduced(int k, int n, const BoundaryParams& params = BoundaryParams::distinct());

/// [C(m + r + c, r) + omega delta_rc], r, c = 0..n.
CycMatrix build_general_binomial(int m, int n, const CycInt& omega);
GaussMatrix build_general_binomial_gauss(int m, int n, const GaussInt& omega);

/// Alternating vector 1, 0, -1, 0, 1, ... of length 2m-1.
std::vector<int> alternating_u(int m);

/// Matrix of size n^2+1 bordering H_{n-1} with row (-1)^n x_n U^T, column
/// y_n U and corner x_n + y_n; U is (n-1)^2 zeros followed by u_n.
PolyMatrix build_bordered(int n, const BoundaryParams& params = BoundaryParams::distinct());

/// Symmetric reordering of H_{k,n}: rows are reflected, then everything is
/// listed in colour-sorted order, so that every boundary parameter lands on
/// the diagonal. det(matrix) = sign * det(H_{k,n}).
struct SymmetrizedForm {
  PolyMatrix matrix;
  int sign;
  std::vector<Index> order;
};
SymmetrizedForm build_symmetrized(int k, int n, const BoundaryParams& params = BoundaryParams::distinct());

int permutation_sign(const std::vector<Index>& perm);

}  // namespace huckel
