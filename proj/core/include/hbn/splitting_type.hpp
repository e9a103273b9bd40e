#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hbn {

/// Exponents e_1 <= ... <= e_k of a split bundle O(e_1) + ... + O(e_k) on P^1.
///
/// Always stored sorted; construction from an unsorted list sorts it.
class SplittingType {
 public:
  static SplittingType make(std::span<const int> values);
  static SplittingType make(std::initializer_list<int> values) {
    return make(std::span<const int>(values.begin(), values.size()));
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int front() const { return entries_.front(); }
  int back() const { return entries_.back(); }
  long total() const;
  const std::vector<int>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

  std::string to_string() const;

 private:
  explicit SplittingType(std::vector<int> sorted) : entries_(std::move(sorted)) {}
  std::vector<int> entries_;
};

/// Genus, gonality and degree of the line bundles under study.
struct GonalContext {
  int g = 0;
  int k = 2;
  int d = 0;

  /// Sum every splitting type of this context must have: d - g + 1 - k.
  long expected_total() const { return static_cast<long>(d) - g + 1 - k; }
  bool admits(const SplittingType& e) const;

  friend bool operator==(const GonalContext&, const GonalContext&) = default;
};

/// Balanced-plus-balanced pattern ((-b-1)^x, (-b)^y, a^u, (a+1)^v).
struct BBType {
  int a = 0;
  int b = 1;
  int x = 0;
  int y = 1;
  int u = 1;
  int v = 0;

  int length() const { return x + y + u + v; }
  /// a >= 0, b >= 1, x >= 0, y > 0, u > 0, v >= 0.
  bool is_valid() const;
  /// Expands the pattern; counts may be zero here, so this also serves raw
  /// patterns that are not valid BBTypes (e.g. u = 0).
  SplittingType reconstruct() const;
  /// Sections at twist 0: u(a+1) + v(a+2).
  int h0() const { return u * (a + 1) + v * (a + 2); }

  friend bool operator==(const BBType&, const BBType&) = default;
  friend auto operator<=>(const BBType&, const BBType&) = default;

  std::string to_string() const;
};

SplittingType twist(const SplittingType& e, int n);

/// h^0(O(e)(n)) = sum max(0, e_i + n + 1).
long h0(const SplittingType& e, int n);
/// h^1(O(e)(n)) = sum max(0, -e_i - n - 1).
long h1(const SplittingType& e, int n);

/// sum_{i<j} max(0, e_j - e_i - 1); codimension of the splitting locus and
/// dimension of Ext^1(O(e), O(e)).
long u_invariant(const SplittingType& e);

/// Prefix-sum (dominance) order. Throws incomparable_error unless both types
/// have the same length and total.
bool leq(const SplittingType& lower, const SplittingType& upper);

/// h0(lower, n) >= h0(upper, n) on the window where the two profiles can
/// differ. Same preconditions as leq.
bool h0_dominates(const SplittingType& lower, const SplittingType& upper);

/// Twist window [lo, hi] outside of which the h^0 profiles of `a` and `b`
/// agree identically.
struct TwistWindow {
  int lo;
  int hi;
};
TwistWindow comparison_window(const SplittingType& a, const SplittingType& b);

/// Every e' <= e with u(e') <= u_max, sorted ascending.
/// Throws input_error if u_max < u(e).
std::vector<SplittingType> downward_closure(const SplittingType& e, long u_max);

std::optional<BBType> detect_bb(const SplittingType& e);

/// g - u(e) when the splitting locus is nonempty on a general k-gonal curve.
std::optional<long> expected_dim(const SplittingType& e, int g);

/// The generic (most balanced) type of the given length and total.
SplittingType balanced_type(int k, long total);

}  // namespace hbn
