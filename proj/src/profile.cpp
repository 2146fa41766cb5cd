#include "roadmatch/profile.hpp"

#include <algorithm>

namespace roadmatch {

namespace {

// Ties sort S points before T points; input order is kept within each list,
// so runs are reproducible. Any tie order yields the same costs because tied
// points bound zero-length intervals.
bool point_less(const RoadPoint& a, const RoadPoint& b) {
  if (a.y != b.y) return a.y < b.y;
  if (a.is_source != b.is_source) return a.is_source;
  return a.index < b.index;
}

RoadProfile build_one(int32_t road, double length, std::vector<RoadPoint> points) {
  std::sort(points.begin(), points.end(), point_less);

  RoadProfile p;
  p.road = road;
  p.points = std::move(points);
  const size_t k = p.points.size();

  p.breakpoints.reserve(k + 2);
  p.breakpoints.push_back(0.0);
  for (const RoadPoint& pt : p.points) p.breakpoints.push_back(pt.y);
  p.breakpoints.push_back(length);

  p.prefix.reserve(k + 1);
  int64_t running = 0;
  int64_t min_f = 0, max_f = 0;
  p.prefix.push_back(0);
  for (const RoadPoint& pt : p.points) {
    running += pt.is_source ? 1 : -1;
    p.prefix.push_back(running);
    min_f = std::min(min_f, running);
    max_f = std::max(max_f, running);
  }
  p.surplus = running;

  // Levels are the values of -f; f steps by +-1 so they form a consecutive
  // integer run. Accumulate the interval length carried by each level.
  p.level_min = -max_f;
  const int64_t num_levels = max_f - min_f + 1;
  p.level_measure.assign(static_cast<size_t>(num_levels), 0.0);
  for (size_t i = 0; i + 1 < p.breakpoints.size(); ++i) {
    const double len = p.breakpoints[i + 1] - p.breakpoints[i];
    const int64_t level = -p.prefix[i] - p.level_min;
    p.level_measure[static_cast<size_t>(level)] += len;
  }

  // Piece j covers [level_{j-1}, level_j]. On it, intervals at levels below j
  // count positively and the rest negatively:
  //   beta_j  = measure(levels < j) - measure(levels >= j)
  //   alpha_j = sum of f*len over levels < j - sum over levels >= j
  // where f on level l equals -(level_min + l).
  long double measure_total = 0.0L, weighted_total = 0.0L;
  for (int64_t l = 0; l < num_levels; ++l) {
    measure_total += p.level_measure[static_cast<size_t>(l)];
    weighted_total += static_cast<long double>(p.level_measure[static_cast<size_t>(l)]) *
                      static_cast<long double>(-(p.level_min + l));
  }
  p.pieces.resize(static_cast<size_t>(num_levels) + 1);
  long double measure_below = 0.0L, weighted_below = 0.0L;
  for (int64_t j = 0; j <= num_levels; ++j) {
    p.pieces[static_cast<size_t>(j)].beta =
        static_cast<double>(2.0L * measure_below - measure_total);
    p.pieces[static_cast<size_t>(j)].alpha =
        static_cast<double>(2.0L * weighted_below - weighted_total);
    if (j < num_levels) {
      measure_below += p.level_measure[static_cast<size_t>(j)];
      weighted_below += static_cast<long double>(p.level_measure[static_cast<size_t>(j)]) *
                        static_cast<long double>(-(p.level_min + j));
    }
  }
  return p;
}

}  // namespace

int64_t CcfpInstance::total_linear_pieces() const {
  int64_t total = 0;
  for (const CcfpRoad& r : roads) {
    total += r.profile < 0 ? 2 : static_cast<int64_t>(profiles[r.profile].pieces.size());
  }
  return total;
}

CcfpInstance build_profiles(const MatchingInstance& instance) {
  const Roadmap& rm = instance.roadmap;
  CcfpInstance out;
  out.num_vertices = rm.num_vertices();
  out.total_length = rm.total_length;
  out.node_supply.assign(rm.vertex_ids.size(), 0);
  out.roads.reserve(rm.roads.size());
  for (const Road& r : rm.roads) {
    out.roads.push_back(CcfpRoad{r.tail, r.head, r.length, -1});
  }

  std::vector<std::vector<RoadPoint>> per_road(rm.roads.size());
  for (size_t i = 0; i < instance.sources.size(); ++i) {
    const Address& a = instance.sources[i];
    per_road[a.road].push_back(RoadPoint{a.y, true, static_cast<int32_t>(i)});
  }
  for (size_t i = 0; i < instance.targets.size(); ++i) {
    const Address& a = instance.targets[i];
    per_road[a.road].push_back(RoadPoint{a.y, false, static_cast<int32_t>(i)});
  }

  for (int32_t r = 0; r < rm.num_roads(); ++r) {
    if (per_road[r].empty()) continue;
    out.roads[r].profile = static_cast<int32_t>(out.profiles.size());
    out.profiles.push_back(build_one(r, rm.roads[r].length, std::move(per_road[r])));
    out.node_supply[rm.roads[r].head] += out.profiles.back().surplus;
  }
  return out;
}

}  // namespace roadmatch
