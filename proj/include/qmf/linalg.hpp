#ifndef QMF_LINALG_HPP
#define QMF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

std::size_t rank(RationalMatrix rows);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Rational> solution;  // filled only when Unique
};

// Solves sum_j x_j columns[j] = rhs exactly. All columns share rhs's length.
SolveResult solve_columns(const std::vector<std::vector<Rational>>& columns,
                          const std::vector<Rational>& rhs);

}  // namespace qmf

#endif
