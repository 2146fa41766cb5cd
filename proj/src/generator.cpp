#include "roadmatch/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace roadmatch {

namespace {

// Draws go through explicit arithmetic so the same seed produces the same
// file on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  uint64_t below(uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

std::vector<RawAddress> draw_points(Rng& rng, const std::vector<RawRoad>& roads,
                                    int64_t count) {
  std::vector<double> cumulative;
  cumulative.reserve(roads.size());
  double total = 0.0;
  for (const RawRoad& r : roads) {
    total += r.length;
    cumulative.push_back(total);
  }
  std::vector<RawAddress> out;
  out.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) {
    const double pos = rng.unit() * total;
    const size_t k = static_cast<size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), pos) - cumulative.begin());
    const size_t road = std::min(k, roads.size() - 1);
    const double offset = road == 0 ? pos : pos - cumulative[road - 1];
    out.push_back(RawAddress{roads[road].id,
                             std::clamp(offset, 0.0, roads[road].length)});
  }
  return out;
}

}  // namespace

RawInstance generate_instance(const GeneratorParams& params) {
  if (params.num_vertices < 1 || params.num_roads < 1 ||
      params.num_roads < params.num_vertices - 1 || params.num_points < 0 ||
      !(params.min_length > 0.0) || params.max_length < params.min_length) {
    throw Error(Errc::invalid_params,
                "need vertices >= 1, roads >= max(1, vertices - 1), points >= 0, "
                "0 < min-len <= max-len");
  }

  Rng rng(params.seed);
  RawInstance raw;
  raw.vertices.reserve(static_cast<size_t>(params.num_vertices));
  for (int32_t i = 0; i < params.num_vertices; ++i) {
    raw.vertices.push_back("v" + std::to_string(i));
  }

  auto add_road = [&](int32_t tail, int32_t head) {
    raw.roads.push_back(RawRoad{"r" + std::to_string(raw.roads.size()),
                                raw.vertices[static_cast<size_t>(tail)],
                                raw.vertices[static_cast<size_t>(head)],
                                rng.uniform(params.min_length, params.max_length)});
  };

  // Random spanning tree keeps the graph connected; extra roads may create
  // loops and parallels.
  for (int32_t i = 1; i < params.num_vertices; ++i) {
    add_road(static_cast<int32_t>(rng.below(static_cast<uint64_t>(i))), i);
  }
  while (static_cast<int32_t>(raw.roads.size()) < params.num_roads) {
    const int32_t a = static_cast<int32_t>(rng.below(static_cast<uint64_t>(params.num_vertices)));
    const int32_t b = static_cast<int32_t>(rng.below(static_cast<uint64_t>(params.num_vertices)));
    add_road(a, b);
  }

  raw.sources = draw_points(rng, raw.roads, params.num_points);
  raw.targets = draw_points(rng, raw.roads, params.num_points);
  return raw;
}

RawInstance generate_points_on(const RawInstance& raw, int64_t num_points, uint64_t seed) {
  if (num_points < 0) {
    throw Error(Errc::invalid_params, "points must be >= 0");
  }
  if (raw.roads.empty()) {
    throw Error(Errc::invalid_params, "roadmap has no roads to place points on");
  }
  Rng rng(seed);
  RawInstance out = raw;
  out.sources = draw_points(rng, out.roads, num_points);
  out.targets = draw_points(rng, out.roads, num_points);
  return out;
}

}  // namespace roadmatch
