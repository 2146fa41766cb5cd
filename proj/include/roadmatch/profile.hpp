#pragma once

#include <cstdint>
#include <vector>

#include "roadmatch/roadmap.hpp"

namespace roadmatch {

enum class PushDirection { forward, backward };

// A point sorted onto a road, tagged with its origin list and index there.
struct RoadPoint {
  double y = 0.0;
  bool is_source = false;
  int32_t index = 0;
};

// One linear piece of a road cost function: value = alpha + beta * z.
struct LinePiece {
  double alpha = 0.0;
  double beta = 0.0;
};

// Piecewise-linear convex cost of routing z extra matches forward across a
// road, together with the interval decomposition it was derived from.
//
//   breakpoints  [0, y_1, ..., y_K, L]        sorted point coordinates with
//                                             sentinels (ties keep zero-length
//                                             intervals)
//   prefix       [f_0, ..., f_K]              running S-minus-T count on each
//                                             interval; f_0 = 0, steps are +-1
//   surplus      f_K                          number of S minus T points here
//   level_min    smallest value taken by -f
//   level_measure                             total interval length per level,
//                                             levels are consecutive integers
//                                             level_min, level_min+1, ...
//   pieces       one more entry than levels; piece j covers
//                [level_{j-1}, level_j], the first and last extend to +-inf
struct RoadProfile {
  int32_t road = 0;
  std::vector<RoadPoint> points;
  std::vector<double> breakpoints;
  std::vector<int64_t> prefix;
  int64_t surplus = 0;
  int64_t level_min = 0;
  std::vector<double> level_measure;
  std::vector<LinePiece> pieces;

  int64_t num_levels() const { return static_cast<int64_t>(level_measure.size()); }

  // O(1): positional lookup into the consecutive-integer piece table.
  double cost(int64_t z) const {
    int64_t j = z - level_min;
    if (j < 0) j = 0;
    const int64_t last = num_levels();
    if (j > last) j = last;
    const LinePiece& p = pieces[static_cast<size_t>(j)];
    return p.alpha + p.beta * static_cast<double>(z);
  }

  double cost_delta(int64_t z, int64_t delta, PushDirection dir) const {
    const int64_t to = dir == PushDirection::forward ? z + delta : z - delta;
    return cost(to) - cost(z);
  }
};

struct CcfpRoad {
  int32_t tail = 0;
  int32_t head = 0;
  double length = 0.0;
  int32_t profile = -1;  // -1: no points on the road, cost is length * |z|
};

// The flow problem produced by transcription: per-road convex costs and
// vertex supplies b(u), the sum of surpluses over roads whose head is u.
struct CcfpInstance {
  int32_t num_vertices = 0;
  std::vector<CcfpRoad> roads;
  std::vector<RoadProfile> profiles;  // materialized only for roads with points
  std::vector<int64_t> node_supply;
  double total_length = 0.0;

  int32_t num_roads() const { return static_cast<int32_t>(roads.size()); }

  double cost(int32_t road, int64_t z) const {
    const CcfpRoad& r = roads[road];
    if (r.profile < 0) return r.length * static_cast<double>(z < 0 ? -z : z);
    return profiles[r.profile].cost(z);
  }

  double cost_delta(int32_t road, int64_t z, int64_t delta, PushDirection dir) const {
    const int64_t to = dir == PushDirection::forward ? z + delta : z - delta;
    return cost(road, to) - cost(road, z);
  }

  // Stored pieces plus the two implicit pieces of every point-free road.
  int64_t total_linear_pieces() const;
};

// Sorts the points onto their roads and builds all per-road arrays plus the
// vertex supplies. Roads without points stay implicit. O(E + M log M).
CcfpInstance build_profiles(const MatchingInstance& instance);

}  // namespace roadmatch
