#pragma once

#include <cstdint>

#include "roadmatch/roadmap.hpp"

namespace roadmatch {

struct GeneratorParams {
  uint64_t seed = 0;
  int32_t num_vertices = 1;
  int32_t num_roads = 1;
  int64_t num_points = 0;  // M; the instance gets M pickups and M deliveries
  double min_length = 1.0;
  double max_length = 1.0;
};

// Connected random multigraph (random spanning tree plus extra roads, loops
// allowed), uniform lengths, points placed uniformly over the total road
// length. Deterministic per seed.
RawInstance generate_instance(const GeneratorParams& params);

// Fresh uniform points on an existing roadmap; S and T of `raw` are replaced.
RawInstance generate_points_on(const RawInstance& raw, int64_t num_points, uint64_t seed);

}  // namespace roadmatch
