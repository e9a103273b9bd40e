#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hbn/prime_field.hpp"

namespace hbn {

/// Dense matrix over F_p, row-major; entries must already be reduced.
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::size_t rank(const PrimeField& f, FpMatrix m);

/// Some nonzero x with m x = 0, if the kernel is nontrivial.
std::optional<std::vector<std::uint32_t>> kernel_vector(const PrimeField& f, FpMatrix m);

}  // namespace hbn
