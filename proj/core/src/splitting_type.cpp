#include "hbn/splitting_type.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hbn/errors.hpp"

namespace hbn {

SplittingType SplittingType::make(std::span<const int> values) {
  if (values.empty()) throw input_error("splitting type must have at least one entry");
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return SplittingType(std::move(sorted));
}

long SplittingType::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

bool GonalContext::admits(const SplittingType& e) const {
  return static_cast<int>(e.size()) == k && e.total() == expected_total();
}

bool BBType::is_valid() const {
  return a >= 0 && b >= 1 && x >= 0 && y > 0 && u > 0 && v >= 0;
}

SplittingType BBType::reconstruct() const {
  if (x < 0 || y < 0 || u < 0 || v < 0 || length() == 0)
    throw input_error("pattern " + to_string() + " has no entries or a negative count");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  out.insert(out.end(), static_cast<std::size_t>(x), -b - 1);
  out.insert(out.end(), static_cast<std::size_t>(y), -b);
  out.insert(out.end(), static_cast<std::size_t>(u), a);
  out.insert(out.end(), static_cast<std::size_t>(v), a + 1);
  return SplittingType::make(out);
}

std::string BBType::to_string() const {
  std::ostringstream os;
  os << "B(a=" << a << ",b=" << b << ",x=" << x << ",y=" << y << ",u=" << u << ",v=" << v << ')';
  return os.str();
}

SplittingType twist(const SplittingType& e, int n) {
  std::vector<int> out(e.begin(), e.end());
  for (int& value : out) value += n;
  return SplittingType::make(out);
}

long h0(const SplittingType& e, int n) {
  long total = 0;
  for (int value : e) total += std::max(0L, static_cast<long>(value) + n + 1);
  return total;
}

long h1(const SplittingType& e, int n) {
  long total = 0;
  for (int value : e) total += std::max(0L, -static_cast<long>(value) - n - 1);
  return total;
}

long u_invariant(const SplittingType& e) {
  long total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      total += std::max(0L, static_cast<long>(e[j]) - e[i] - 1);
  return total;
}

namespace {

void require_comparable(const SplittingType& a, const SplittingType& b) {
  if (a.size() != b.size())
    throw incomparable_error("splitting types " + a.to_string() + " and " + b.to_string() +
                             " have different lengths");
  if (a.total() != b.total())
    throw incomparable_error("splitting types " + a.to_string() + " and " + b.to_string() +
                             " have different totals");
}

}  // namespace

bool leq(const SplittingType& lower, const SplittingType& upper) {
  require_comparable(lower, upper);
  long lhs = 0;
  long rhs = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    lhs += lower[i];
    rhs += upper[i];
    if (lhs > rhs) return false;
  }
  return true;
}

TwistWindow comparison_window(const SplittingType& a, const SplittingType& b) {
  const int hi_entry = std::max(a.back(), b.back());
  const int lo_entry = std::min(a.front(), b.front());
  return {-hi_entry - 1, -lo_entry + 1};
}

bool h0_dominates(const SplittingType& lower, const SplittingType& upper) {
  require_comparable(lower, upper);
  const auto window = comparison_window(lower, upper);
  for (int n = window.lo; n <= window.hi; ++n)
    if (h0(lower, n) < h0(upper, n)) return false;
  return true;
}

namespace {

struct ClosureSearch {
  std::vector<long> upper_prefix;
  long total;
  long u_max;
  int lo;
  int hi;
  std::size_t k;
  std::vector<int> current;
  std::vector<SplittingType> found;

  void extend(long sum, long u_so_far) {
    const std::size_t len = current.size();
    if (len == k) {
      if (sum == total) found.push_back(SplittingType::make(current));
      return;
    }
    const int start = len == 0 ? lo : current.back();
    const long remaining = static_cast<long>(k - len);
    for (int value = start; value <= hi; ++value) {
      // Entries only grow from here on, so the total can no longer be met.
      if (sum + remaining * value > total) break;
      if (sum + value + (remaining - 1) * static_cast<long>(hi) < total) continue;
      if (sum + value > upper_prefix[len]) break;
      long added = 0;
      for (int prev : current) added += std::max(0L, static_cast<long>(value) - prev - 1);
      if (u_so_far + added > u_max) break;
      current.push_back(value);
      extend(sum + value, u_so_far + added);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<SplittingType> downward_closure(const SplittingType& e, long u_max) {
  if (u_max < u_invariant(e))
    throw input_error("u_max " + std::to_string(u_max) + " is below u" + e.to_string());
  ClosureSearch search;
  search.k = e.size();
  search.total = e.total();
  search.u_max = u_max;
  search.lo = static_cast<int>(e.front() - u_max - 1);
  search.hi = static_cast<int>(e.back() + u_max + 1);
  long running = 0;
  for (int value : e) {
    running += value;
    search.upper_prefix.push_back(running);
  }
  search.current.reserve(e.size());
  search.extend(0, 0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::optional<BBType> detect_bb(const SplittingType& e) {
  // Negative entries must be {-b-1, -b} with -b present; nonnegative ones
  // {a, a+1} with a present.
  std::vector<std::pair<int, int>> runs;
  for (int value : e) {
    if (!runs.empty() && runs.back().first == value)
      ++runs.back().second;
    else
      runs.emplace_back(value, 1);
  }
  const auto split = std::find_if(runs.begin(), runs.end(), [](const auto& r) { return r.first >= 0; });
  const std::vector<std::pair<int, int>> negative(runs.begin(), split);
  const std::vector<std::pair<int, int>> nonnegative(split, runs.end());
  if (negative.empty() || nonnegative.empty()) return std::nullopt;
  if (negative.size() > 2 || nonnegative.size() > 2) return std::nullopt;

  BBType bb;
  bb.b = -negative.back().first;
  bb.y = negative.back().second;
  bb.x = 0;
  if (negative.size() == 2) {
    if (negative.front().first != -bb.b - 1) return std::nullopt;
    bb.x = negative.front().second;
  }
  bb.a = nonnegative.front().first;
  bb.u = nonnegative.front().second;
  bb.v = 0;
  if (nonnegative.size() == 2) {
    if (nonnegative.back().first != bb.a + 1) return std::nullopt;
    bb.v = nonnegative.back().second;
  }
  return bb;
}

std::optional<long> expected_dim(const SplittingType& e, int g) {
  const long u = u_invariant(e);
  if (u > g) return std::nullopt;
  return g - u;
}

SplittingType balanced_type(int k, long total) {
  if (k < 1) throw input_error("balanced type needs k >= 1");
  // floor division so negative totals round toward -infinity
  long base = total / k;
  if (total % k != 0 && total < 0) --base;
  const long extra = total - base * k;
  std::vector<int> out(static_cast<std::size_t>(k), static_cast<int>(base));
  for (long i = 0; i < extra; ++i) out[static_cast<std::size_t>(k - 1 - i)] += 1;
  return SplittingType::make(out);
}

}  // namespace hbn
