#include <doctest.h>

#include <random>
#include <vector>

#include "roadmatch/oracles.hpp"
#include "roadmatch/pipeline.hpp"
#include "test_support.hpp"

using namespace roadmatch;

TEST_CASE("assignment solver on pinned matrices") {
  CHECK(hungarian_min_cost({{0.0}}).cost == doctest::Approx(0.0));

  const Assignment two = hungarian_min_cost({{1.0, 2.0}, {2.0, 1.0}});
  CHECK(two.cost == doctest::Approx(2.0));
  CHECK(two.target_of == std::vector<int32_t>{0, 1});

  const Assignment three =
      hungarian_min_cost({{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}, {3.0, 6.0, 9.0}});
  CHECK(three.cost == doctest::Approx(10.0));
  CHECK(three.target_of == std::vector<int32_t>{2, 1, 0});

  CHECK(hungarian_min_cost({}).cost == doctest::Approx(0.0));
}

TEST_CASE("assignment solver equals enumeration on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> entry(0.0, 10.0);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t m = 1 + rng() % 7;
    CostMatrix cost(m, std::vector<double>(m));
    for (auto& row : cost) {
      for (double& c : row) c = entry(rng);
    }
    const Assignment a = hungarian_min_cost(cost);
    CHECK(a.cost == doctest::Approx(min_cost_by_enumeration(cost)).epsilon(1e-9));

    long double replay = 0.0L;
    for (size_t i = 0; i < m; ++i) replay += cost[i][static_cast<size_t>(a.target_of[i])];
    CHECK(a.cost == doctest::Approx(static_cast<double>(replay)).epsilon(1e-12));
  }
}

TEST_CASE("line matching") {
  const LineMatch basic = line_match({2.0, 7.0}, {3.0, 9.0});
  CHECK(basic.cost == doctest::Approx(3.0));
  CHECK(line_match({1.0, 2.0}, {1.0, 2.0}).cost == doctest::Approx(0.0));
  CHECK(line_match({5.0}, {1.0}).cost == doctest::Approx(4.0));

  // Unsorted inputs pair by rank, reported with original indices.
  const LineMatch shuffled = line_match({7.0, 2.0}, {9.0, 3.0});
  CHECK(shuffled.cost == doctest::Approx(3.0));
  CHECK(shuffled.pairs[0] == std::pair<int32_t, int32_t>{1, 1});
  CHECK(shuffled.pairs[1] == std::pair<int32_t, int32_t>{0, 0});
}

TEST_CASE("circle matching") {
  CHECK(circle_min_cost({0.5}, {9.5}, 10.0) == doctest::Approx(1.0));
  CHECK(circle_min_cost({1.0, 2.0}, {1.0, 2.0}, 10.0) == doctest::Approx(0.0));
  CHECK(circle_min_cost({0.0}, {5.0}, 10.0) == doctest::Approx(5.0));
}

TEST_CASE("line matching equals the assignment solver") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(0.0, 20.0);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t m = 1 + rng() % 7;
    std::vector<double> s(m), t(m);
    for (double& y : s) y = coord(rng);
    for (double& y : t) y = coord(rng);
    CostMatrix cost(m, std::vector<double>(m));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) cost[i][j] = std::abs(s[i] - t[j]);
    }
    CHECK(line_match(s, t).cost ==
          doctest::Approx(hungarian_min_cost(cost).cost).epsilon(1e-9));
  }
}

TEST_CASE("circle matching equals the assignment solver") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const double circumference = 1.0 + static_cast<double>(rng() % 100) / 10.0;
    std::uniform_real_distribution<double> coord(0.0, circumference);
    const size_t m = 1 + rng() % 7;
    std::vector<double> s(m), t(m);
    for (double& y : s) y = coord(rng);
    for (double& y : t) y = coord(rng);
    CostMatrix cost(m, std::vector<double>(m));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        const double direct = std::abs(s[i] - t[j]);
        cost[i][j] = std::min(direct, circumference - direct);
      }
    }
    CHECK(circle_min_cost(s, t, circumference) ==
          doctest::Approx(hungarian_min_cost(cost).cost).epsilon(1e-9));
  }
}

TEST_CASE("pipeline reproduces the specialized solvers") {
  std::mt19937_64 rng(31);
  SUBCASE("single road") {
    for (int trial = 0; trial < 10; ++trial) {
      const double length = 5.0 + static_cast<double>(rng() % 100) / 10.0;
      std::uniform_real_distribution<double> coord(0.0, length);
      const size_t m = rng() % 9;
      std::vector<double> s(m), t(m);
      for (double& y : s) y = coord(rng);
      for (double& y : t) y = coord(rng);
      const MatchingInstance inst = validate_instance(test::single_road(length, s, t));
      const PipelineResult result = run_pipeline(inst);
      CHECK(approx_equal(result.cost, line_match(s, t).cost, 1e-9));
    }
  }
  SUBCASE("single loop") {
    for (int trial = 0; trial < 10; ++trial) {
      const double circumference = 5.0 + static_cast<double>(rng() % 100) / 10.0;
      std::uniform_real_distribution<double> coord(0.0, circumference);
      const size_t m = rng() % 9;
      std::vector<double> s(m), t(m);
      for (double& y : s) y = coord(rng);
      for (double& y : t) y = coord(rng);
      const MatchingInstance inst = validate_instance(test::single_loop(circumference, s, t));
      const PipelineResult result = run_pipeline(inst);
      CHECK(approx_equal(result.cost, circle_min_cost(s, t, circumference), 1e-9));
    }
  }
}
