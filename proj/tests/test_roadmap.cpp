#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "roadmatch/generator.hpp"
#include "roadmatch/roadmap.hpp"
#include "test_support.hpp"

using namespace roadmatch;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

Address random_address(const Roadmap& rm, std::mt19937_64& rng) {
  std::uniform_int_distribution<int32_t> road(0, rm.num_roads() - 1);
  const int32_t r = road(rng);
  std::uniform_real_distribution<double> y(0.0, rm.roads[r].length);
  return Address{r, y(rng)};
}

}  // namespace

TEST_CASE("empty instance validates") {
  RawInstance raw = test::single_road(1.0, {}, {});
  const MatchingInstance inst = validate_instance(raw);
  CHECK(inst.size() == 0);
  CHECK(inst.roadmap.num_roads() == 1);
  CHECK(inst.roadmap.total_length == doctest::Approx(1.0));
}

TEST_CASE("validation rejects bad instances") {
  SUBCASE("negative length") {
    RawInstance raw = test::single_road(-2.0, {}, {});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::non_positive_length);
  }
  SUBCASE("zero length") {
    RawInstance raw = test::single_road(0.0, {}, {});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::non_positive_length);
  }
  SUBCASE("nan length") {
    RawInstance raw = test::single_road(std::nan(""), {}, {});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::non_positive_length);
  }
  SUBCASE("dangling endpoint") {
    RawInstance raw = test::single_road(1.0, {}, {});
    raw.roads[0].head = "nowhere";
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::dangling_endpoint);
  }
  SUBCASE("two disjoint roads") {
    RawInstance raw;
    raw.vertices = {"a", "b", "c", "d"};
    raw.roads = {RawRoad{"r1", "a", "b", 1.0}, RawRoad{"r2", "c", "d", 1.0}};
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::disconnected);
  }
  SUBCASE("cardinality mismatch") {
    RawInstance raw = test::single_road(1.0, {0.5}, {});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::cardinality_mismatch);
  }
  SUBCASE("coordinate out of range") {
    RawInstance raw = test::single_road(1.0, {1.5}, {0.5});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::coordinate_out_of_range);
    raw = test::single_road(1.0, {-0.1}, {0.5});
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::coordinate_out_of_range);
  }
  SUBCASE("duplicate ids") {
    RawInstance raw = test::single_road(1.0, {}, {});
    raw.vertices.push_back("u");
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::parse_error);
  }
  SUBCASE("unknown road in address") {
    RawInstance raw = test::single_road(1.0, {0.5}, {0.5});
    raw.sources[0].road = "zz";
    CHECK(code_of([&] { validate_instance(raw); }) == Errc::parse_error);
  }
}

TEST_CASE("points may sit exactly on vertices") {
  RawInstance raw = test::single_road(1.0, {0.0}, {1.0});
  const MatchingInstance inst = validate_instance(raw);
  CHECK(inst.sources[0].y == 0.0);
  CHECK(inst.targets[0].y == 1.0);
}

TEST_CASE("distance on a shared road") {
  const MatchingInstance inst = validate_instance(test::single_road(10.0, {2.0}, {7.0}));
  CHECK(roadmap_distance(inst.roadmap, Address{0, 2.0}, Address{0, 7.0}) ==
        doctest::Approx(5.0));
}

TEST_CASE("distance across parallel roads picks the cheapest endpoint route") {
  const MatchingInstance inst = validate_instance(test::parallel_example());
  // Routes: via u 0.5+0.5, via v 0.5+2.5, mixed 0.5+1+2.5 and 0.5+3+0.5.
  CHECK(roadmap_distance(inst.roadmap, Address{0, 0.5}, Address{1, 0.5}) ==
        doctest::Approx(1.0));
}

TEST_CASE("distance around a self-loop") {
  const MatchingInstance inst = validate_instance(test::single_loop(10.0, {0.5}, {9.5}));
  CHECK(roadmap_distance(inst.roadmap, Address{0, 0.5}, Address{0, 9.5}) ==
        doctest::Approx(1.0));
}

TEST_CASE("distance metric properties on random roadmaps") {
  std::mt19937_64 rng(7);
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    const MatchingInstance inst =
        validate_instance(generate_instance(test::small_params(seed)));
    const Roadmap& rm = inst.roadmap;
    const DistanceOracle metric(rm);
    for (int trial = 0; trial < 20; ++trial) {
      const Address a = random_address(rm, rng);
      const Address b = random_address(rm, rng);
      const Address c = random_address(rm, rng);
      const double ab = metric(a, b);
      CHECK(ab == doctest::Approx(metric(b, a)).epsilon(1e-12));
      CHECK(metric(a, a) == doctest::Approx(0.0));
      CHECK(ab <= rm.total_length + 1e-9);
      CHECK(metric(a, c) <= ab + metric(b, c) + 1e-9);
      // The one-shot helper agrees with the precomputed oracle.
      CHECK(roadmap_distance(rm, a, b) == doctest::Approx(ab).epsilon(1e-12));
    }
  }
}

TEST_CASE("distance on one non-loop road is the offset difference") {
  std::mt19937_64 rng(11);
  const MatchingInstance inst = validate_instance(test::single_road(8.0, {}, {}));
  std::uniform_real_distribution<double> y(0.0, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Address a{0, y(rng)};
    const Address b{0, y(rng)};
    CHECK(roadmap_distance(inst.roadmap, a, b) ==
          doctest::Approx(std::abs(a.y - b.y)).epsilon(1e-12));
  }
}
