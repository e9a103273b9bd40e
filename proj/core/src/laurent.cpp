#include "hbn/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hbn/errors.hpp"

namespace hbn {

LaurentPoly::LaurentPoly(int low, std::vector<std::uint32_t> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(std::uint32_t coeff, int exponent) {
  if (coeff == 0) return {};
  return LaurentPoly(exponent, {coeff});
}

LaurentPoly LaurentPoly::from_terms(const PrimeField& field,
                                    std::span<const std::pair<int, std::int64_t>> terms) {
  std::map<int, std::uint32_t> acc;
  for (const auto& [exponent, coeff] : terms) acc[exponent] = field.add(acc[exponent], field.reduce(coeff));
  if (acc.empty()) return {};
  const int low = acc.begin()->first;
  const int high = acc.rbegin()->first;
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(high - low + 1), 0);
  for (const auto& [exponent, coeff] : acc) coeffs[static_cast<std::size_t>(exponent - low)] = coeff;
  return LaurentPoly(low, std::move(coeffs));
}

bool LaurentPoly::is_monomial() const {
  return coeffs_.size() == 1;
}

std::uint32_t LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int m) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += m;
  return out;
}

std::string LaurentPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, coeff] : terms()) {
    if (!first) os << ' ';
    os << coeff << '^' << exponent;
    first = false;
  }
  return os.str();
}

namespace {

LaurentPoly combine(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? scale(f, b, f.neg(1)) : b;
  const int low = std::min(a.min_exponent(), b.min_exponent());
  const int high = std::max(a.max_exponent(), b.max_exponent());
  std::vector<std::pair<int, std::int64_t>> terms;
  terms.reserve(static_cast<std::size_t>(high - low + 1));
  for (int e = low; e <= high; ++e) {
    const std::uint32_t value = subtract ? f.sub(a.coeff(e), b.coeff(e)) : f.add(a.coeff(e), b.coeff(e));
    if (value) terms.emplace_back(e, value);
  }
  return LaurentPoly::from_terms(f, terms);
}

}  // namespace

LaurentPoly add(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b) {
  return combine(f, a, b, false);
}

LaurentPoly sub(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b) {
  return combine(f, a, b, true);
}

LaurentPoly mul(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_[i]) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % p;
  }
  std::vector<std::uint32_t> coeffs(acc.begin(), acc.end());
  return LaurentPoly(a.low_ + b.low_, std::move(coeffs));
}

LaurentPoly scale(const PrimeField& f, const LaurentPoly& a, std::uint32_t c) {
  if (c == 0 || a.is_zero()) return {};
  std::vector<std::uint32_t> coeffs = a.coeffs_;
  for (auto& value : coeffs) value = f.mul(value, c);
  return LaurentPoly(a.low_, std::move(coeffs));
}

LaurentPoly divide_exact(const PrimeField& f, const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw input_error("division by the zero Laurent polynomial");
  if (a.is_zero()) return {};
  // Both normalized: constant and leading coefficients nonzero, so ordinary
  // polynomial long division decides exactness.
  std::vector<std::uint32_t> rem = a.coeffs_;
  const auto& den = b.coeffs_;
  if (rem.size() < den.size()) throw input_error("Laurent division is not exact");
  const std::uint32_t lead_inv = f.inv(den.back());
  std::vector<std::uint32_t> quot(rem.size() - den.size() + 1, 0);
  for (std::size_t pos = quot.size(); pos-- > 0;) {
    const std::uint32_t q = f.mul(rem[pos + den.size() - 1], lead_inv);
    quot[pos] = q;
    if (!q) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[pos + j] = f.sub(rem[pos + j], f.mul(q, den[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c != 0; }))
    throw input_error("Laurent division is not exact");
  return LaurentPoly(a.low_ - b.low_, std::move(quot));
}

LaurentGrid LaurentGrid::identity(std::size_t size) {
  LaurentGrid out(size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = LaurentPoly::constant(1);
  return out;
}

LaurentGrid multiply(const PrimeField& f, const LaurentGrid& a, const LaurentGrid& b) {
  if (a.k != b.k) throw input_error("matrix size mismatch");
  LaurentGrid out(a.k);
  for (std::size_t i = 0; i < a.k; ++i)
    for (std::size_t l = 0; l < a.k; ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < a.k; ++j) {
        if (b(l, j).is_zero()) continue;
        out(i, j) = add(f, out(i, j), mul(f, a(i, l), b(l, j)));
      }
    }
  return out;
}

LaurentPoly determinant(const PrimeField& f, const LaurentGrid& m) {
  const std::size_t n = m.k;
  if (n == 0) return LaurentPoly::constant(1);
  LaurentGrid work = m;
  bool negate = false;
  LaurentPoly previous = LaurentPoly::constant(1);
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      negate = !negate;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        const LaurentPoly cross =
            sub(f, mul(f, work(i, j), work(col, col)), mul(f, work(i, col), work(col, j)));
        work(i, j) = divide_exact(f, cross, previous);
      }
      work(i, col) = {};
    }
    previous = work(col, col);
  }
  LaurentPoly det = work(n - 1, n - 1);
  return negate ? scale(f, det, f.neg(1)) : det;
}

bool is_polynomial_in_t(const LaurentGrid& m) {
  return std::all_of(m.entries.begin(), m.entries.end(),
                     [](const LaurentPoly& p) { return p.is_zero() || p.min_exponent() >= 0; });
}

bool is_polynomial_in_t_inverse(const LaurentGrid& m) {
  return std::all_of(m.entries.begin(), m.entries.end(),
                     [](const LaurentPoly& p) { return p.is_zero() || p.max_exponent() <= 0; });
}

LaurentMatrix::LaurentMatrix(PrimeField field, LaurentGrid grid) : field_(field), grid_(std::move(grid)) {
  if (grid_.k == 0) throw input_error("matrix must have positive size");
  if (grid_.entries.size() != grid_.k * grid_.k) throw input_error("matrix entry count does not match size");
  const LaurentPoly det = determinant(field_, grid_);
  if (!det.is_monomial())
    throw input_error("determinant " + (det.is_zero() ? std::string("0") : det.to_string()) +
                      " is not a unit of F_p[t, t^-1]");
  det_exponent_ = det.min_exponent();
  det_coefficient_ = det.coeff(det_exponent_);
}

int LaurentMatrix::max_exponent() const {
  bool seen = false;
  int out = 0;
  for (const auto& entry : grid_.entries) {
    if (entry.is_zero()) continue;
    out = seen ? std::max(out, entry.max_exponent()) : entry.max_exponent();
    seen = true;
  }
  return out;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (!(a.field() == b.field())) throw input_error("matrices live over different fields");
  return LaurentMatrix(a.field(), multiply(a.field(), a.grid(), b.grid()));
}

}  // namespace hbn
