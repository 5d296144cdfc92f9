#include "qmf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qmf {
namespace {

// Row reduction in place; returns pivot column per pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t j = col; j < m[r].size(); ++j) m[r][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
  }
  return row_reduce(rows, ncols).size();
}

SolveResult solve_columns(const std::vector<std::vector<Rational>>& columns,
                          const std::vector<Rational>& rhs) {
  const std::size_t n = rhs.size();
  const std::size_t m = columns.size();
  RationalMatrix aug(n, std::vector<Rational>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    if (columns[j].size() != n) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug[i][m] = rhs[i];

  const auto pivots = row_reduce(aug, m + 1);
  const bool inconsistent = !pivots.empty() && pivots.back() == m;
  const std::size_t column_rank = pivots.size() - (inconsistent ? 1 : 0);
  if (column_rank < m) return {SolveStatus::Underdetermined, {}};
  if (inconsistent) return {SolveStatus::Inconsistent, {}};
  std::vector<Rational> x(m);
  for (std::size_t r = 0; r < m; ++r) x[pivots[r]] = aug[r][m];
  return {SolveStatus::Unique, std::move(x)};
}

}  // namespace qmf
