#include "hbn/bundle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hbn/errors.hpp"
#include "hbn/fp_linear.hpp"

namespace hbn {

LaurentMatrix diag_transition(const PrimeField& field, const SplittingType& e) {
  LaurentGrid grid(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) grid(i, i) = LaurentPoly::monomial(1, -e[i]);
  return LaurentMatrix(field, std::move(grid));
}

namespace {

int column_degree(const LaurentGrid& m, std::size_t j) {
  int out = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < m.k; ++i)
    if (!m(i, j).is_zero()) out = std::max(out, m(i, j).max_exponent());
  return out;
}

}  // namespace

BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& m) {
  const PrimeField& f = m.field();
  const std::size_t k = m.size();
  LaurentGrid current = m.grid();
  LaurentGrid right = LaurentGrid::identity(k);  // invariant: m = current * right
  std::vector<int> degree(k);

  // Each pass lowers the sum of column degrees, which is bounded below by the
  // determinant exponent.
  long budget = 0;
  for (std::size_t j = 0; j < k; ++j) budget += column_degree(current, j);
  budget -= m.det_exponent();

  for (long pass = 0;; ++pass) {
    if (pass > budget) throw std::logic_error("column reduction failed to terminate");
    FpMatrix leading(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      degree[j] = column_degree(current, j);
      for (std::size_t i = 0; i < k; ++i) leading(i, j) = current(i, j).coeff(degree[j]);
    }
    const auto alpha = kernel_vector(f, leading);
    if (!alpha) break;
    std::size_t target = k;
    for (std::size_t j = 0; j < k; ++j)
      if ((*alpha)[j] && (target == k || degree[j] > degree[target])) target = j;
    const std::uint32_t inv = f.inv((*alpha)[target]);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == target || !(*alpha)[j]) continue;
      const LaurentPoly factor = LaurentPoly::monomial(f.mul((*alpha)[j], inv), degree[target] - degree[j]);
      for (std::size_t i = 0; i < k; ++i)
        current(i, target) = add(f, current(i, target), mul(f, factor, current(i, j)));
      for (std::size_t c = 0; c < k; ++c)
        right(j, c) = sub(f, right(j, c), mul(f, factor, right(target, c)));
    }
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  LaurentGrid left(k);
  LaurentGrid right_sorted(k);
  std::vector<int> exponents(k);
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t src = order[pos];
    exponents[pos] = -degree[src];
    for (std::size_t i = 0; i < k; ++i) left(i, pos) = current(i, src).shifted(-degree[src]);
    for (std::size_t c = 0; c < k; ++c) right_sorted(pos, c) = right(src, c);
  }

  BirkhoffFactorization out{LaurentMatrix(f, std::move(left)), SplittingType::make(exponents),
                            LaurentMatrix(f, std::move(right_sorted))};

  const bool left_ok = is_polynomial_in_t_inverse(out.left.grid()) && out.left.det_exponent() == 0;
  const bool right_ok = is_polynomial_in_t(out.right.grid()) && out.right.det_exponent() == 0;
  const LaurentGrid product =
      multiply(f, multiply(f, out.left.grid(), diag_transition(f, out.type).grid()), out.right.grid());
  if (!left_ok || !right_ok || !(product == m.grid()))
    throw std::logic_error("Birkhoff factorization failed its exactness check");
  return out;
}

SplittingType splitting_type(const LaurentMatrix& m) {
  return birkhoff_factorize(m).type;
}

std::vector<int> section_degree_bounds(const LaurentMatrix& m, int n) {
  const std::size_t k = m.size();
  std::vector<long> row_max(k, std::numeric_limits<long>::min());
  std::vector<long> col_max(k, std::numeric_limits<long>::min());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto& entry = m(i, j);
      if (entry.is_zero()) continue;
      row_max[i] = std::max(row_max[i], static_cast<long>(entry.max_exponent()));
      col_max[j] = std::max(col_max[j], static_cast<long>(entry.max_exponent()));
    }
  const long row_sum = std::accumulate(row_max.begin(), row_max.end(), 0L);
  const long col_sum = std::accumulate(col_max.begin(), col_max.end(), 0L);
  // s = t^n M^-1 w with w over F_p[t^-1]; (M^-1)_{jl} is the (l, j) cofactor
  // over det = c t^m, and that cofactor's top exponent is at most the
  // row-sum (resp. column-sum) of maxima with row l (resp. column j) removed.
  std::vector<int> bounds(k);
  for (std::size_t j = 0; j < k; ++j) {
    long best = std::numeric_limits<long>::min();
    for (std::size_t l = 0; l < k; ++l)
      best = std::max(best, std::min(row_sum - row_max[l], col_sum - col_max[j]));
    bounds[j] = static_cast<int>(n - static_cast<long>(m.det_exponent()) + best);
  }
  return bounds;
}

namespace {

long h0_with_bounds(const LaurentMatrix& m, int n, const std::vector<int>& bounds) {
  const std::size_t k = m.size();
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t j = 0; j < k; ++j) offset[j + 1] = offset[j] + static_cast<std::size_t>(std::max(0, bounds[j] + 1));
  const std::size_t unknowns = offset[k];
  if (unknowns == 0) return 0;

  // Row (i, p) forces the coefficient of t^p, p >= 1, in entry i of t^-n M s
  // to vanish.
  int top = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (m(i, j).is_zero() || bounds[j] < 0) continue;
      top = std::max(top, m(i, j).max_exponent() + bounds[j] - n);
    }
  if (top < 1) return static_cast<long>(unknowns);
  const std::size_t per_row = static_cast<std::size_t>(top);
  FpMatrix system(k * per_row, unknowns);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (bounds[j] < 0) continue;
      for (const auto& [exponent, coeff] : m(i, j).terms())
        for (int q = 0; q <= bounds[j]; ++q) {
          const int power = q - n + exponent;
          if (power < 1) continue;
          system(i * per_row + static_cast<std::size_t>(power - 1), offset[j] + static_cast<std::size_t>(q)) = coeff;
        }
    }
  return static_cast<long>(unknowns - rank(m.field(), std::move(system)));
}

}  // namespace

long h0_twist(const LaurentMatrix& m, int n) {
  return h0_with_bounds(m, n, section_degree_bounds(m, n));
}

long h0_twist_with_slack(const LaurentMatrix& m, int n, int slack) {
  auto bounds = section_degree_bounds(m, n);
  for (int& b : bounds) b += slack;
  return h0_with_bounds(m, n, bounds);
}

}  // namespace hbn
