#pragma once

#include <cstdint>

namespace hbn {

/// Arithmetic in F_p for an odd prime p < 2^31.
class PrimeField {
 public:
  /// Throws input_error unless p is an odd prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t value) const {
    const std::int64_t r = value % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Throws input_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace hbn
