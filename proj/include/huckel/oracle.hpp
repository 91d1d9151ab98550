#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "huckel/builders.hpp"

namespace huckel {

/// a x b array, weakly decreasing along rows and columns, entries in [0, c].
using PlanePartition = std::vector<std::vector<int>>;

bool is_plane_partition(const PlanePartition& p, int a, int b, int c);

/// Row-by-row enumeration; every row is dominated by the one above.
BigInt count_plane_partitions(int a, int b, int c);

/// Simple undirected graph on vertices 0..size-1.
struct SimpleGraph {
  int size = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Induced subgraph of the honeycomb on the vertices that are not removed
/// (boundary slots are ignored), relabelled in increasing order.
SimpleGraph induced_subgraph(const TriangleGraph& g, const std::vector<Index>& removed);

/// Perfect matchings by eliminating the lowest unmatched vertex. An odd
/// vertex count gives 0.
BigInt count_matchings(const SimpleGraph& g);

struct SquareEntry {
  std::string monomial;
  BigInt coef;
  std::optional<BigInt> root;
};

struct SquareAudit {
  bool all_squares = true;
  std::vector<SquareEntry> entries;
};

SquareAudit square_coefficient_audit(const MultiPoly& p);

}  // namespace huckel
