#pragma once

#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hbn/extensions.hpp"

namespace hbn {

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  ExtClass gamma;
  SplittingType observed;  // splitting type of E_v
};

struct ClaimResult {
  std::string name;
  long trials = 0;
  long violations = 0;
  /// False for exploratory tabulations whose violations carry no verdict.
  bool assertive = true;
  std::optional<Counterexample> first_counterexample;
  /// Extra named counts (exploratory tabulations).
  std::map<std::string, long> tallies;
};

struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::vector<ClaimResult> claims;

  /// Any assertive claim with a violation.
  bool has_violation() const;
};

struct ExperimentOptions {
  long trials = 100;
  std::uint32_t prime = 101;
  std::uint64_t seed = 0;
  /// 0 = hardware concurrency. Always capped by HBN_THREADS when set.
  unsigned workers = 0;
  /// Replace every sampled class by the zero class.
  bool force_zero_class = false;
  /// Negative control for the prop5 dichotomy: test "not surjective at 0
  /// implies doubled" instead of "surjective at 0 implies doubled".
  bool reverse_dichotomy = false;
};

/// Seed of trial `index`; depends only on (master, index).
std::uint64_t trial_seed(std::uint64_t master, std::size_t index);

/// Effective worker count after applying the HBN_THREADS cap.
unsigned resolve_workers(unsigned requested);

/// Bounds on E_v for E of type B(0,b,y,u,v), v > 0, b >= 2: minimum entry,
/// count at -b-1, maximum entry, count at 1, and "surjective on H^0 at n = 0
/// implies E_v = E + E".
ExperimentReport experiment_prop5(const BBType& bb, const ExperimentOptions& options);

/// Every nonzero class fails surjectivity at some twist of
/// tangent_twist_set(e); the zero class passes everywhere; splitting by
/// factorization agrees with surjectivity on the whole twist window.
ExperimentReport experiment_twist_reduction(const SplittingType& e, const ExperimentOptions& options);

/// Tabulates whether surjectivity at -e' and at -e_i agree, where
/// e_{i-1} + 2 <= e' < e_i. Exploratory: never counts as a violation.
ExperimentReport experiment_prop6(const SplittingType& e, int e_prime, const ExperimentOptions& options);

namespace detail {

/// fn(i) for i in [0, count) on `workers` threads; results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn fn) {
  std::vector<std::optional<T>> slots(count);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned id, unsigned stride) {
    for (std::size_t i = id; i < count; i += stride) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const unsigned stride = std::max(1u, workers);
  if (stride == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < stride; ++id) pool.emplace_back(run, id, stride);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace detail

}  // namespace hbn
