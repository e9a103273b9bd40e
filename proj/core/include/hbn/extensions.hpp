#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "hbn/bundle.hpp"
#include "hbn/splitting_type.hpp"

namespace hbn {

/// Coordinate of Ext^1(O(e), O(e)): the monomial t^m in block entry (i, j),
/// 0-based, with i < j and -e_j < m < -e_i.
struct ExtSlot {
  int i = 0;
  int j = 0;
  int m = 0;
  friend auto operator<=>(const ExtSlot&, const ExtSlot&) = default;
};

/// Every admissible slot of O(e); there are exactly u(e) of them.
std::vector<ExtSlot> admissible_slots(const SplittingType& e);

/// Class of an extension 0 -> O(e) -> E_v -> O(e) -> 0. Missing slots are zero.
class ExtClass {
 public:
  explicit ExtClass(SplittingType base) : base_(std::move(base)) {}
  /// Throws input_error on any non-admissible slot.
  ExtClass(SplittingType base, std::map<ExtSlot, std::uint32_t> coeffs);

  const SplittingType& base() const { return base_; }
  const std::map<ExtSlot, std::uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const ExtClass&, const ExtClass&) = default;

 private:
  SplittingType base_;
  std::map<ExtSlot, std::uint32_t> coeffs_;
};

/// Uniform independent coefficients in every admissible slot, determined by
/// `seed`.
ExtClass random_ext_class(const SplittingType& e, const PrimeField& field, std::uint64_t seed);

/// [[D, G], [0, D]] with D = diag_transition(base), G_ij = sum_m c(i,j,m) t^m.
LaurentMatrix extension_transition(const ExtClass& gamma, const PrimeField& field);

/// Whether H^0(E_v(n)) -> H^0(E(n)) is onto, i.e. h0_twist(E_v, n) = 2 h0(e, n).
bool surjective_at(const ExtClass& gamma, const PrimeField& field, int n);

/// Twists [-max(e) - 2, -min(e) + 1]; outside it surjectivity is automatic.
TwistWindow extension_window(const SplittingType& e);

/// The splitting type of E_v equals e doubled (factorization route).
bool is_split_extension(const ExtClass& gamma, const PrimeField& field);

/// Surjective at every twist of extension_window (cohomology route).
bool surjective_at_all_twists(const ExtClass& gamma, const PrimeField& field);

/// Each entry of e repeated twice.
SplittingType doubled(const SplittingType& e);

}  // namespace hbn
