#include "hbn/fp_linear.hpp"

#include <utility>

namespace hbn {

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> eliminate(const PrimeField& f, FpMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
    const std::uint32_t inv = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const std::uint32_t factor = m(i, col);
      if (!factor) continue;
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& f, FpMatrix m) {
  return eliminate(f, m).size();
}

std::optional<std::vector<std::uint32_t>> kernel_vector(const PrimeField& f, FpMatrix m) {
  const auto pivots = eliminate(f, m);
  if (pivots.size() == m.cols) return std::nullopt;
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<std::uint32_t> x(m.cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(m(r, free_col));
  return x;
}

}  // namespace hbn
