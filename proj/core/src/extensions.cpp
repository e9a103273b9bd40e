#include "hbn/extensions.hpp"

#include <algorithm>
#include <random>

#include "hbn/errors.hpp"

namespace hbn {

std::vector<ExtSlot> admissible_slots(const SplittingType& e) {
  std::vector<ExtSlot> out;
  const int k = static_cast<int>(e.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int m = -e[static_cast<std::size_t>(j)] + 1; m < -e[static_cast<std::size_t>(i)]; ++m)
        out.push_back({i, j, m});
  return out;
}

namespace {

bool is_admissible(const SplittingType& e, const ExtSlot& slot) {
  const int k = static_cast<int>(e.size());
  if (slot.i < 0 || slot.j >= k || slot.i >= slot.j) return false;
  return -e[static_cast<std::size_t>(slot.j)] < slot.m && slot.m < -e[static_cast<std::size_t>(slot.i)];
}

}  // namespace

ExtClass::ExtClass(SplittingType base, std::map<ExtSlot, std::uint32_t> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  for (const auto& [slot, value] : coeffs_) {
    (void)value;
    if (!is_admissible(base_, slot))
      throw input_error("slot (" + std::to_string(slot.i) + "," + std::to_string(slot.j) + "," +
                        std::to_string(slot.m) + ") is not admissible for " + base_.to_string());
  }
}

bool ExtClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second == 0; });
}

ExtClass random_ext_class(const SplittingType& e, const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.modulus() - 1);
  std::map<ExtSlot, std::uint32_t> coeffs;
  for (const auto& slot : admissible_slots(e)) coeffs[slot] = coeff(rng);
  return ExtClass(e, std::move(coeffs));
}

LaurentMatrix extension_transition(const ExtClass& gamma, const PrimeField& field) {
  const auto& e = gamma.base();
  const std::size_t k = e.size();
  LaurentGrid grid(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    grid(i, i) = LaurentPoly::monomial(1, -e[i]);
    grid(k + i, k + i) = LaurentPoly::monomial(1, -e[i]);
  }
  for (const auto& [slot, value] : gamma.coeffs()) {
    if (!value) continue;
    auto& entry = grid(static_cast<std::size_t>(slot.i), k + static_cast<std::size_t>(slot.j));
    entry = add(field, entry, LaurentPoly::monomial(field.reduce(value), slot.m));
  }
  return LaurentMatrix(field, std::move(grid));
}

bool surjective_at(const ExtClass& gamma, const PrimeField& field, int n) {
  return h0_twist(extension_transition(gamma, field), n) == 2 * h0(gamma.base(), n);
}

TwistWindow extension_window(const SplittingType& e) {
  return {-e.back() - 2, -e.front() + 1};
}

SplittingType doubled(const SplittingType& e) {
  std::vector<int> out;
  out.reserve(2 * e.size());
  for (int value : e) {
    out.push_back(value);
    out.push_back(value);
  }
  return SplittingType::make(out);
}

bool is_split_extension(const ExtClass& gamma, const PrimeField& field) {
  return splitting_type(extension_transition(gamma, field)) == doubled(gamma.base());
}

bool surjective_at_all_twists(const ExtClass& gamma, const PrimeField& field) {
  const LaurentMatrix transition = extension_transition(gamma, field);
  const auto window = extension_window(gamma.base());
  for (int n = window.lo; n <= window.hi; ++n)
    if (h0_twist(transition, n) != 2 * h0(gamma.base(), n)) return false;
  return true;
}

}  // namespace hbn
