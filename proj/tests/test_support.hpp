#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "roadmatch/generator.hpp"
#include "roadmatch/roadmap.hpp"

namespace roadmatch::test {

// Handmade builders for the small fixtures used across suites.

inline RawInstance single_road(double length, std::vector<double> s, std::vector<double> t) {
  RawInstance raw;
  raw.vertices = {"u", "v"};
  raw.roads = {RawRoad{"r", "u", "v", length}};
  for (double y : s) raw.sources.push_back(RawAddress{"r", y});
  for (double y : t) raw.targets.push_back(RawAddress{"r", y});
  return raw;
}

inline RawInstance single_loop(double circumference, std::vector<double> s,
                               std::vector<double> t) {
  RawInstance raw;
  raw.vertices = {"u"};
  raw.roads = {RawRoad{"r", "u", "u", circumference}};
  for (double y : s) raw.sources.push_back(RawAddress{"r", y});
  for (double y : t) raw.targets.push_back(RawAddress{"r", y});
  return raw;
}

// Two roads in a path: u -(r1, len 1)- v -(r2, len 1)- w, one pickup on r1
// and one delivery on r2.
inline RawInstance path_example() {
  RawInstance raw;
  raw.vertices = {"u", "v", "w"};
  raw.roads = {RawRoad{"r1", "u", "v", 1.0}, RawRoad{"r2", "v", "w", 1.0}};
  raw.sources = {RawAddress{"r1", 0.5}};
  raw.targets = {RawAddress{"r2", 0.5}};
  return raw;
}

// Parallel roads u-v of lengths 1 and 3; the pickup sits on the short road
// and the delivery on the long one, nearest to u.
inline RawInstance parallel_example() {
  RawInstance raw;
  raw.vertices = {"u", "v"};
  raw.roads = {RawRoad{"r1", "u", "v", 1.0}, RawRoad{"r2", "u", "v", 3.0}};
  raw.sources = {RawAddress{"r1", 0.5}};
  raw.targets = {RawAddress{"r2", 0.5}};
  return raw;
}

// Varied small instances for property tests: 1..6 vertices, up to 10 roads
// with loops and parallels, M up to 10, lengths in [0.1, 10].
inline GeneratorParams small_params(uint64_t seed) {
  std::mt19937_64 mix(seed * 0x9e3779b97f4a7c15ULL + 1);
  GeneratorParams p;
  p.seed = seed;
  p.num_vertices = static_cast<int32_t>(1 + mix() % 6);
  p.num_roads = static_cast<int32_t>(
      std::max<uint64_t>(std::max(1, p.num_vertices - 1), 1 + mix() % 10));
  p.num_points = static_cast<int64_t>(mix() % 11);
  p.min_length = 0.1;
  p.max_length = 10.0;
  return p;
}

// Duplicates a few coordinates across and within the point sets so that ties
// and zero-length intervals show up in generated instances.
inline void inject_ties(RawInstance& raw, uint64_t seed) {
  if (raw.sources.empty()) return;
  std::mt19937_64 mix(seed);
  raw.targets[mix() % raw.targets.size()] = raw.sources[mix() % raw.sources.size()];
  if (raw.sources.size() > 1) {
    raw.sources[mix() % raw.sources.size()] = raw.sources[mix() % raw.sources.size()];
  }
}

}  // namespace roadmatch::test
