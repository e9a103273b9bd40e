#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hbn/prime_field.hpp"

namespace hbn {

/// Element of F_p[t, t^-1]. Coefficients are stored densely from the lowest
/// nonzero exponent; the zero polynomial has no coefficients. Arithmetic takes
/// the field explicitly.
class LaurentPoly {
 public:
  using Term = std::pair<int, std::uint32_t>;  // (exponent, coefficient)

  LaurentPoly() = default;
  static LaurentPoly monomial(std::uint32_t coeff, int exponent);
  static LaurentPoly constant(std::uint32_t coeff) { return monomial(coeff, 0); }
  /// Terms with repeated exponents are summed; coefficients are reduced mod p.
  static LaurentPoly from_terms(const PrimeField& field, std::span<const std::pair<int, std::int64_t>> terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const;
  /// Undefined for the zero polynomial.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t coeff(int exponent) const;
  std::vector<Term> terms() const;

  /// Multiplication by t^m.
  LaurentPoly shifted(int m) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly add(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly sub(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly mul(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly scale(const PrimeField& f, const LaurentPoly& a, std::uint32_t c);
  /// a / b when b divides a in the Laurent ring; throws input_error otherwise.
  friend LaurentPoly divide_exact(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b);

  std::string to_string() const;

 private:
  LaurentPoly(int low, std::vector<std::uint32_t> coeffs);
  void normalize();

  int low_ = 0;
  std::vector<std::uint32_t> coeffs_;
};

/// Square matrix over F_p[t, t^-1], row-major. No invertibility requirement;
/// used for intermediate products and transition-matrix checks.
struct LaurentGrid {
  std::size_t k = 0;
  std::vector<LaurentPoly> entries;

  LaurentGrid() = default;
  explicit LaurentGrid(std::size_t size) : k(size), entries(size * size) {}
  static LaurentGrid identity(std::size_t size);

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries[i * k + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * k + j]; }

  friend bool operator==(const LaurentGrid&, const LaurentGrid&) = default;
};

LaurentGrid multiply(const PrimeField& f, const LaurentGrid& a, const LaurentGrid& b);
/// Fraction-free (Bareiss) determinant.
LaurentPoly determinant(const PrimeField& f, const LaurentGrid& m);

/// All entries in F_p[t] (no negative exponents).
bool is_polynomial_in_t(const LaurentGrid& m);
/// All entries in F_p[t^-1] (no positive exponents).
bool is_polynomial_in_t_inverse(const LaurentGrid& m);

/// k x k matrix over F_p[t, t^-1] whose determinant is a unit c t^m, i.e. the
/// transition matrix of a rank-k bundle on P^1.
class LaurentMatrix {
 public:
  /// Throws input_error when the determinant is not a unit of the Laurent ring.
  LaurentMatrix(PrimeField field, LaurentGrid grid);

  std::size_t size() const { return grid_.k; }
  const PrimeField& field() const { return field_; }
  const LaurentGrid& grid() const { return grid_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }
  /// m in det = c t^m.
  int det_exponent() const { return det_exponent_; }
  std::uint32_t det_coefficient() const { return det_coefficient_; }
  /// Largest exponent appearing in any entry.
  int max_exponent() const;

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.field_ == b.field_ && a.grid_ == b.grid_;
  }

 private:
  PrimeField field_;
  LaurentGrid grid_;
  int det_exponent_ = 0;
  std::uint32_t det_coefficient_ = 1;
};

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);

}  // namespace hbn
