#include "hbn/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hbn/components.hpp"
#include "hbn/errors.hpp"

namespace hbn {

bool ExperimentReport::has_violation() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.assertive && c.violations > 0; });
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Outcome of one trial: which claims it tested and which it violated.
struct TrialOutcome {
  std::uint64_t seed = 0;
  ExtClass gamma;
  SplittingType observed;
  std::vector<bool> tested;
  std::vector<bool> violated;
  std::vector<std::string> tally_keys;
};

ExtClass sample_class(const SplittingType& e, const PrimeField& field, std::uint64_t seed,
                      const ExperimentOptions& options) {
  if (options.force_zero_class) return ExtClass(e);
  return random_ext_class(e, field, seed);
}

ExperimentReport merge(std::string experiment, const ExperimentOptions& options,
                       std::vector<ClaimResult> claims, const std::vector<TrialOutcome>& outcomes) {
  for (std::size_t index = 0; index < outcomes.size(); ++index) {
    const auto& outcome = outcomes[index];
    for (std::size_t c = 0; c < claims.size(); ++c) {
      if (!outcome.tested[c]) continue;
      auto& claim = claims[c];
      ++claim.trials;
      if (!outcome.violated[c]) continue;
      ++claim.violations;
      if (!claim.first_counterexample)
        claim.first_counterexample = Counterexample{index, outcome.seed, outcome.gamma, outcome.observed};
    }
    for (const auto& key : outcome.tally_keys) ++claims.back().tallies[key];
  }
  return ExperimentReport{std::move(experiment), options.seed, options.prime, std::move(claims)};
}

ClaimResult claim(std::string name, bool assertive = true) {
  ClaimResult out;
  out.name = std::move(name);
  out.assertive = assertive;
  return out;
}

void require_trials(const ExperimentOptions& options) {
  if (options.trials < 1) throw input_error("trials must be at least 1");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index)));
}

unsigned resolve_workers(unsigned requested) {
  unsigned workers = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HBN_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && value >= 1) workers = std::min(workers, static_cast<unsigned>(value));
  }
  return workers;
}

ExperimentReport experiment_prop5(const BBType& bb, const ExperimentOptions& options) {
  if (!bb.is_valid() || bb.a != 0 || bb.v < 1 || bb.b < 2)
    throw input_error(bb.to_string() + " is not a type II pattern with b >= 2");
  require_trials(options);
  const PrimeField field(options.prime);
  const SplittingType e = bb.reconstruct();
  const SplittingType split = doubled(e);
  const int low = -bb.b - 1;

  std::vector<ClaimResult> claims = {
      claim("claim1_min_entry"), claim("claim2_low_count"), claim("claim3_max_entry"),
      claim("claim4_top_count"),
      claim(options.reverse_dichotomy ? "dichotomy_reversed" : "dichotomy")};

  auto outcomes = detail::parallel_map<TrialOutcome>(
      static_cast<std::size_t>(options.trials), resolve_workers(options.workers), [&](std::size_t index) {
        const std::uint64_t seed = trial_seed(options.seed, index);
        ExtClass gamma = sample_class(e, field, seed, options);
        SplittingType observed = splitting_type(extension_transition(gamma, field));
        const auto count = [&](int value) {
          return static_cast<long>(std::count(observed.begin(), observed.end(), value));
        };
        const bool is_doubled = observed == split;
        const bool onto = surjective_at(gamma, field, 0);
        const bool dichotomy_ok = options.reverse_dichotomy ? (onto || is_doubled) : (!onto || is_doubled);
        TrialOutcome out{seed, std::move(gamma), observed, std::vector<bool>(5, true), {}, {}};
        out.violated = {observed.front() < low, count(low) > 2L * bb.x, observed.back() > 1,
                        count(1) > 2L * bb.v, !dichotomy_ok};
        return out;
      });
  return merge("prop5", options, std::move(claims), outcomes);
}

ExperimentReport experiment_twist_reduction(const SplittingType& e, const ExperimentOptions& options) {
  if (u_invariant(e) <= 0) throw input_error(e.to_string() + " has u = 0; there is nothing to detect");
  require_trials(options);
  const PrimeField field(options.prime);
  const auto twists = tangent_twist_set(e);

  std::vector<ClaimResult> claims = {claim("nonzero_detected_in_tangent_twists"),
                                     claim("zero_class_surjective"),
                                     claim("split_iff_surjective_on_window")};

  auto outcomes = detail::parallel_map<TrialOutcome>(
      static_cast<std::size_t>(options.trials), resolve_workers(options.workers), [&](std::size_t index) {
        const std::uint64_t seed = trial_seed(options.seed, index);
        // Trial 0 always exercises the zero class.
        ExtClass gamma = index == 0 ? ExtClass(e) : sample_class(e, field, seed, options);
        const LaurentMatrix transition = extension_transition(gamma, field);
        SplittingType observed = splitting_type(transition);
        const auto onto = [&](int n) { return h0_twist(transition, n) == 2 * h0(e, n); };
        bool all_twists = true;
        for (int n : twists) all_twists = all_twists && onto(n);
        const auto window = extension_window(e);
        bool whole_window = true;
        for (int n = window.lo; n <= window.hi && whole_window; ++n) whole_window = onto(n);
        const bool split = observed == doubled(e);

        TrialOutcome out{seed, std::move(gamma), observed, {}, {}, {}};
        const bool zero = out.gamma.is_zero();
        out.tested = {!zero, zero, true};
        out.violated = {!zero && all_twists, zero && !all_twists, split != whole_window};
        return out;
      });
  return merge("twist_reduction", options, std::move(claims), outcomes);
}

ExperimentReport experiment_prop6(const SplittingType& e, int e_prime, const ExperimentOptions& options) {
  std::optional<std::size_t> gap;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] + 2 <= e_prime && e_prime < e[i]) {
      gap = i;
      break;
    }
  if (!gap)
    throw input_error("e' = " + std::to_string(e_prime) + " lies in no gap e_{i-1}+2 <= e' < e_i of " +
                      e.to_string());
  require_trials(options);
  const PrimeField field(options.prime);
  const int upper = e[*gap];

  std::vector<ClaimResult> claims = {claim("surjectivity_agrees_at_e_prime_and_e_i", false)};
  auto outcomes = detail::parallel_map<TrialOutcome>(
      static_cast<std::size_t>(options.trials), resolve_workers(options.workers), [&](std::size_t index) {
        const std::uint64_t seed = trial_seed(options.seed, index);
        ExtClass gamma = sample_class(e, field, seed, options);
        const LaurentMatrix transition = extension_transition(gamma, field);
        const bool at_prime = h0_twist(transition, -e_prime) == 2 * h0(e, -e_prime);
        const bool at_entry = h0_twist(transition, -upper) == 2 * h0(e, -upper);
        SplittingType observed = splitting_type(transition);
        TrialOutcome out{seed, std::move(gamma), observed, {true}, {at_prime != at_entry}, {}};
        if (at_prime && at_entry) out.tally_keys.push_back("both_surjective");
        else if (!at_prime && !at_entry) out.tally_keys.push_back("neither_surjective");
        else if (at_prime) out.tally_keys.push_back("only_at_e_prime");
        else out.tally_keys.push_back("only_at_e_i");
        return out;
      });
  auto report = merge("prop6", options, std::move(claims), outcomes);
  auto& tallies = report.claims.front().tallies;
  for (const char* key : {"both_surjective", "neither_surjective", "only_at_e_prime", "only_at_e_i"})
    tallies.try_emplace(key, 0);
  return report;
}

}  // namespace hbn
