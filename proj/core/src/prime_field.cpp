#include "hbn/prime_field.hpp"

#include <string>

#include "hbn/errors.hpp"

namespace hbn {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2 || p >= (1u << 31) || !is_prime(p))
    throw input_error("field size " + std::to_string(p) + " is not an odd prime below 2^31");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw input_error("zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace hbn
