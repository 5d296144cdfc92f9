#include "doctest.h"
#include "qmf/linalg.hpp"

using namespace qmf;

TEST_CASE("rank") {
  CHECK(rank({}) == 0);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}) == 2);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
  CHECK_THROWS_AS(rank({{1, 2}, {1}}), std::invalid_argument);
}

TEST_CASE("solve_columns") {
  // x (1, 1, 1) + y (0, 1, 2) = (2, 3, 4)
  auto r = solve_columns({{1, 1, 1}, {0, 1, 2}}, {2, 3, 4});
  REQUIRE(r.status == SolveStatus::Unique);
  CHECK(r.solution == std::vector<Rational>{2, 1});

  CHECK(solve_columns({{1, 1, 1}, {0, 1, 2}}, {2, 3, 5}).status == SolveStatus::Inconsistent);
  CHECK(solve_columns({{1, 2}, {2, 4}}, {1, 2}).status == SolveStatus::Underdetermined);
  CHECK(solve_columns({{1, 2}, {2, 4}}, {1, 3}).status == SolveStatus::Underdetermined);

  auto empty = solve_columns({}, {0, 0});
  CHECK(empty.status == SolveStatus::Unique);
  CHECK(solve_columns({}, {0, 1}).status == SolveStatus::Inconsistent);
}
