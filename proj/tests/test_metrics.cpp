#include "doctest.h"

#include <numeric>

#include "coflowsim/metrics.hpp"
#include "helpers.hpp"

using namespace coflowsim;
using testutil::coflow;
using testutil::ocs;

TEST_SUITE("metrics") {

TEST_CASE("[metrics] weighted completion sum") {
  const std::vector<double> completion{3.0, 7.0};
  const std::vector<double> weights{2.0, 1.0};
  CHECK(total_weighted_cct(completion, weights) == 13.0);
  CHECK_THROWS_AS(total_weighted_cct(completion, std::vector<double>{1.0}),
                  DimensionMismatchError);

  const Workload w({coflow(7, 2.0, {{1, 0}, {0, 0}}), coflow(8, 1.0, {{0, 3}, {0, 0}})},
                   ocs(2, {1.0}, 1.0));
  Schedule s;
  s.events.push_back({7, 0, 0, 0, 0.0, 1.0, 2.0, 1.0});
  s.events.push_back({8, 0, 0, 1, 2.0, 3.0, 6.0, 3.0});
  CHECK(total_weighted_cct(s, w) == 10.0);

  Schedule missing;
  missing.events.push_back({7, 0, 0, 0, 0.0, 1.0, 2.0, 1.0});
  CHECK_THROWS_AS(total_weighted_cct(missing, w), MissingCoflowError);
}

TEST_CASE("[metrics] normalized totals") {
  CHECK(norm_w(15.0, 10.0) == 1.5);
  CHECK(norm_w(10.0, 10.0) == 1.0);
  CHECK_THROWS_AS(norm_w(1.0, 0.0), ConfigError);
  CHECK_THROWS_AS(norm_w(1.0, -2.0), ConfigError);
}

TEST_CASE("[metrics] nearest-rank tail percentiles") {
  std::vector<double> twenty(20);
  std::iota(twenty.begin(), twenty.end(), 1.0);
  CHECK(tail_cct(twenty, 95.0) == 19.0);

  std::vector<double> hundred(100);
  std::iota(hundred.begin(), hundred.end(), 1.0);
  CHECK(tail_cct(hundred, 99.0) == 99.0);
  CHECK(tail_cct(hundred, 95.0) == 95.0);

  CHECK(tail_cct(std::vector<double>{7.0}, 50.0) == 7.0);

  // order of the input must not matter
  std::vector<double> shuffled{5.0, 1.0, 4.0, 2.0, 3.0};
  CHECK(tail_cct(shuffled, 60.0) == 3.0);

  CHECK_THROWS_AS(tail_cct(std::vector<double>{}, 50.0), ConfigError);
  CHECK_THROWS_AS(tail_cct(std::vector<double>{1.0}, 0.0), ConfigError);
  CHECK_THROWS_AS(tail_cct(std::vector<double>{1.0}, 100.0), ConfigError);
}

}  // TEST_SUITE
