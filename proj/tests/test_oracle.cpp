#include <doctest.h>

#include "huckel/formulas.hpp"
#include "huckel/linalg.hpp"
#include "huckel/oracle.hpp"

using namespace huckel;

TEST_CASE("plane partition validity") {
  CHECK(is_plane_partition({{5, 5, 3, 2, 2}, {5, 5, 2, 1, 0}, {4, 2, 1, 1, 0}}, 3, 5, 7));
  CHECK(is_plane_partition({{7, 6, 6, 6, 1}, {5, 3, 2, 1, 0}, {1, 0, 0, 0, 0}}, 3, 5, 7));
  CHECK_FALSE(is_plane_partition({{1, 2}}, 1, 2, 3));
  CHECK_FALSE(is_plane_partition({{4}}, 1, 1, 3));
}

TEST_CASE("plane partition counts") {
  CHECK(count_plane_partitions(1, 1, 5) == 6);
  CHECK(count_plane_partitions(2, 2, 2) == 20);
  CHECK(count_plane_partitions(2, 3, 4) == formula_macmahon(2, 3, 4));
  CHECK(count_plane_partitions(1, 4, 4) == formula_macmahon(1, 4, 4));
  CHECK(count_plane_partitions(1, 4, 4) == 70);
}

TEST_CASE("matchings") {
  SimpleGraph hex{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
  CHECK(count_matchings(hex) == 2);
  SimpleGraph odd{3, {{0, 1}, {1, 2}}};
  CHECK(count_matchings(odd) == 0);
  SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  CHECK(count_matchings(k4) == 3);
}

TEST_CASE("square audit") {
  const MultiPoly x = MultiPoly::x(0), y = MultiPoly::y(0);
  CHECK(square_coefficient_audit(x * x + (x * y).scaled(49) + y * y).all_squares);
  const SquareAudit bad = square_coefficient_audit(x * x + (x * y).scaled(3));
  CHECK_FALSE(bad.all_squares);
  CHECK(bad.entries.size() == 2);
}
