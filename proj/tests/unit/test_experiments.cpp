#include <doctest.h>

#include <cstdlib>

#include "hbn/errors.hpp"
#include "hbn/experiments.hpp"
#include "hbn/serialize.hpp"

using namespace hbn;
using ST = SplittingType;

namespace {

const ClaimResult& find(const ExperimentReport& report, const std::string& name) {
  for (const auto& c : report.claims)
    if (c.name == name) return c;
  FAIL("missing claim " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("trial seeds depend only on master seed and index") {
  CHECK(trial_seed(7, 3) == trial_seed(7, 3));
  CHECK(trial_seed(7, 3) != trial_seed(7, 4));
  CHECK(trial_seed(7, 3) != trial_seed(8, 3));
}

TEST_CASE("worker cap from HBN_THREADS") {
  ::setenv("HBN_THREADS", "2", 1);
  CHECK(resolve_workers(8) == 2);
  CHECK(resolve_workers(1) == 1);
  ::setenv("HBN_THREADS", "junk", 1);
  CHECK(resolve_workers(8) == 8);
  ::unsetenv("HBN_THREADS");
  CHECK(resolve_workers(3) == 3);
  CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("parallel_map keeps index order and propagates errors") {
  const auto out = detail::parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < 50; ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(detail::parallel_map<int>(10, 3,
                                            [](std::size_t i) -> int {
                                              if (i == 7) throw input_error("boom");
                                              return 0;
                                            }),
                  input_error);
}

TEST_CASE("prop5 on B(0,2,1,1,1)") {
  ExperimentOptions opt;
  opt.trials = 150;
  opt.seed = 7;
  const BBType bb{0, 2, 0, 1, 1, 1};
  const auto report = experiment_prop5(bb, opt);
  CHECK(report.experiment == "prop5");
  CHECK(report.claims.size() == 5);
  CHECK_FALSE(report.has_violation());
  for (const auto& c : report.claims) {
    CHECK(c.trials == 150);
    CHECK(c.violations == 0);
    CHECK_FALSE(c.first_counterexample.has_value());
  }
}

TEST_CASE("prop5 with the zero class forced") {
  ExperimentOptions opt;
  opt.trials = 1;
  opt.force_zero_class = true;
  const auto report = experiment_prop5(BBType{0, 3, 1, 1, 1, 1}, opt);
  CHECK_FALSE(report.has_violation());
}

TEST_CASE("prop5 reversed dichotomy is a working negative control") {
  ExperimentOptions opt;
  opt.trials = 60;
  opt.reverse_dichotomy = true;
  const auto report = experiment_prop5(BBType{0, 2, 0, 1, 1, 1}, opt);
  const auto& c = find(report, "dichotomy_reversed");
  CHECK(c.violations > 0);
  REQUIRE(c.first_counterexample.has_value());
  const auto& ce = *c.first_counterexample;
  CHECK(ce.trial_seed == trial_seed(opt.seed, ce.trial));
  CHECK_FALSE(ce.gamma.is_zero());
  CHECK(report.has_violation());
}

TEST_CASE("prop5 rejects patterns outside its scope") {
  ExperimentOptions opt;
  CHECK_THROWS_AS(experiment_prop5(BBType{0, 1, 0, 1, 1, 1}, opt), input_error);
  CHECK_THROWS_AS(experiment_prop5(BBType{0, 2, 0, 1, 1, 0}, opt), input_error);
  CHECK_THROWS_AS(experiment_prop5(BBType{1, 2, 0, 1, 1, 1}, opt), input_error);
  opt.trials = 0;
  CHECK_THROWS_AS(experiment_prop5(BBType{0, 2, 0, 1, 1, 1}, opt), input_error);
}

TEST_CASE("twist reduction") {
  ExperimentOptions opt;
  opt.trials = 100;
  for (const auto& e : {ST::make({-1, 1}), ST::make({-2, 0, 1})}) {
    const auto report = experiment_twist_reduction(e, opt);
    CHECK_FALSE(report.has_violation());
    CHECK(find(report, "zero_class_surjective").trials >= 1);
    CHECK(find(report, "split_iff_surjective_on_window").trials == 100);
  }
  CHECK_THROWS_AS(experiment_twist_reduction(ST::make({0, 0, 1}), opt), input_error);
}

TEST_CASE("prop6 tabulates without asserting") {
  ExperimentOptions opt;
  opt.trials = 40;
  const auto report = experiment_prop6(ST::make({-4, 0}), -2, opt);
  REQUIRE(report.claims.size() == 1);
  const auto& c = report.claims.front();
  CHECK_FALSE(c.assertive);
  CHECK_FALSE(report.has_violation());
  long total = 0;
  for (const auto& [key, count] : c.tallies) total += count;
  CHECK(total == 40);
  CHECK(c.tallies.size() == 4);

  opt.force_zero_class = true;
  const auto zero = experiment_prop6(ST::make({-4, 0}), -2, opt);
  CHECK(zero.claims.front().tallies.at("both_surjective") == 40);

  CHECK_THROWS_AS(experiment_prop6(ST::make({-4, 0}), 0, opt), input_error);
  CHECK_THROWS_AS(experiment_prop6(ST::make({-4, 0}), -3, opt), input_error);
}

TEST_CASE("reports are identical across worker counts") {
  ExperimentOptions opt;
  opt.trials = 40;
  opt.seed = 99;
  opt.workers = 1;
  const auto serial = to_json(experiment_twist_reduction(ST::make({-2, 0, 1}), opt)).dump();
  opt.workers = 5;
  const auto parallel = to_json(experiment_twist_reduction(ST::make({-2, 0, 1}), opt)).dump();
  CHECK(serial == parallel);
}
