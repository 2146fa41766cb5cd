#include "roadmatch/ccfp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <string>

namespace roadmatch {

double objective_value(const CcfpInstance& inst, const std::vector<int64_t>& flow) {
  long double total = 0.0L;
  for (int32_t r = 0; r < inst.num_roads(); ++r) {
    total += inst.cost(r, flow[static_cast<size_t>(r)]);
  }
  return static_cast<double>(total);
}

std::vector<int64_t> vertex_imbalances(const CcfpInstance& inst,
                                       const std::vector<int64_t>& flow) {
  std::vector<int64_t> e = inst.node_supply;
  for (int32_t r = 0; r < inst.num_roads(); ++r) {
    const CcfpRoad& road = inst.roads[static_cast<size_t>(r)];
    e[road.head] += flow[static_cast<size_t>(r)];
    e[road.tail] -= flow[static_cast<size_t>(r)];
  }
  return e;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ResidualView {
  const CcfpInstance& inst;
  const std::vector<int64_t>& flow;
  const std::vector<double>& potential;
  int64_t delta;

  double reduced_cost(int32_t road, bool backward) const {
    const CcfpRoad& r = inst.roads[static_cast<size_t>(road)];
    const int32_t arc_tail = backward ? r.head : r.tail;
    const int32_t arc_head = backward ? r.tail : r.head;
    const double raw = inst.cost_delta(
        road, flow[static_cast<size_t>(road)], delta,
        backward ? PushDirection::backward : PushDirection::forward);
    return raw - potential[arc_tail] + potential[arc_head];
  }
};

}  // namespace

ShortestPaths shortest_paths_reduced(const CcfpInstance& inst,
                                     const std::vector<int64_t>& flow,
                                     const std::vector<double>& potential,
                                     int64_t delta, int32_t source) {
  const ResidualView view{inst, flow, potential, delta};
  const double tolerance = 1e-9 * std::max(1.0, inst.total_length);

  ShortestPaths sp;
  sp.dist.assign(inst.num_vertices, kInf);
  sp.pred_road.assign(inst.num_vertices, -1);
  sp.pred_backward.assign(inst.num_vertices, 0);

  // Adjacency: both residual directions of every road.
  std::vector<std::vector<std::pair<int32_t, uint8_t>>> out(inst.num_vertices);
  for (int32_t r = 0; r < inst.num_roads(); ++r) {
    const CcfpRoad& road = inst.roads[static_cast<size_t>(r)];
    out[road.tail].emplace_back(r, 0);
    out[road.head].emplace_back(r, 1);
  }

  using Entry = std::pair<double, int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  sp.dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > sp.dist[u]) continue;
    for (auto [r, backward] : out[u]) {
      const CcfpRoad& road = inst.roads[static_cast<size_t>(r)];
      const int32_t v = backward ? road.tail : road.head;
      if (v == u) continue;  // self-loops never shorten a path
      double cost = view.reduced_cost(r, backward != 0);
      if (cost < -tolerance) {
        throw Error(Errc::negative_reduced_cost,
                    "residual arc on road " + std::to_string(r) +
                        " has reduced cost " + std::to_string(cost));
      }
      if (cost < 0.0) cost = 0.0;  // float drift within tolerance
      const double nd = d + cost;
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.pred_road[v] = r;
        sp.pred_backward[v] = backward;
        heap.emplace(nd, v);
      }
    }
  }
  return sp;
}

namespace {

class Solver {
 public:
  Solver(const CcfpInstance& inst, int64_t num_points, const SolveOptions& options)
      : inst_(inst), options_(options) {
    int64_t supply_total = 0;
    for (int64_t b : inst.node_supply) supply_total += b;
    if (supply_total != 0) {
      throw Error(Errc::unbalanced_supply,
                  "vertex supplies sum to " + std::to_string(supply_total));
    }
    flow_.assign(inst.roads.size(), 0);
    potential_.assign(inst.num_vertices, 0.0);
    excess_ = inst.node_supply;
    const int64_t bound = std::max<int64_t>(1, num_points);
    delta_ = 1;
    while (delta_ * 2 <= bound) delta_ *= 2;
    // Potential sums drift by a few ulps of the largest road lengths. On an
    // exactly linear stretch of a road cost that drift would otherwise keep a
    // reduced cost pinned fractionally below zero no matter how much flow is
    // pushed. Violations this small are left in place; they sit far inside
    // the 1e-9-scaled optimality tolerance.
    drift_tolerance_ = 1e-12 * std::max(1.0, inst.total_length);
  }

  SolveResult run() {
    for (; delta_ >= 1; delta_ /= 2) {
      ++stats_.phases;
      saturate_negative_arcs();
      augment_between_imbalanced();
      if (options_.scan_phase_invariant) scan_phase_end();
      // Residual arcs price the next delta units in full, so halving delta
      // also halves the scale of every price; potentials must follow or the
      // next phase compares new costs against stale units.
      if (delta_ > 1) {
        for (double& p : potential_) p *= 0.5;
      }
    }
    for (size_t u = 0; u < excess_.size(); ++u) {
      if (excess_[u] != 0) {
        throw Error(Errc::internal, "vertex " + std::to_string(u) +
                                        " left with imbalance " +
                                        std::to_string(excess_[u]));
      }
    }
    return SolveResult{std::move(flow_), stats_};
  }

 private:
  void push(int32_t road, bool backward) {
    const CcfpRoad& r = inst_.roads[static_cast<size_t>(road)];
    if (backward) {
      flow_[static_cast<size_t>(road)] -= delta_;
      excess_[r.head] -= delta_;
      excess_[r.tail] += delta_;
    } else {
      flow_[static_cast<size_t>(road)] += delta_;
      excess_[r.tail] -= delta_;
      excess_[r.head] += delta_;
    }
  }

  double reduced_cost(int32_t road, bool backward) const {
    return ResidualView{inst_, flow_, potential_, delta_}.reduced_cost(road, backward);
  }

  // Restore per-arc optimality at the new granularity: walk each road's flow
  // level while a delta push pays for itself. The first phase may take
  // several steps to reach the granularity minimizer; afterwards convexity
  // limits each road to one push per phase. The guard is against float
  // surprises only.
  void saturate_negative_arcs() {
    for (int32_t r = 0; r < inst_.num_roads(); ++r) {
      for (const bool backward : {false, true}) {
        int64_t guard = 0;
        while (reduced_cost(r, backward) < -drift_tolerance_) {
          push(r, backward);
          ++stats_.saturation_pushes;
          if (++guard > guard_limit()) {
            throw Error(Errc::internal,
                        "saturation did not converge on road " + std::to_string(r));
          }
        }
      }
    }
  }

  int64_t guard_limit() const {
    int64_t points = 0;
    for (const RoadProfile& p : inst_.profiles) {
      points += static_cast<int64_t>(p.points.size());
    }
    return 4 * (points / delta_ + 2);
  }

  int32_t find_node(int64_t sign) const {
    for (size_t u = 0; u < excess_.size(); ++u) {
      if (sign > 0 ? excess_[u] >= delta_ : excess_[u] <= -delta_) {
        return static_cast<int32_t>(u);
      }
    }
    return -1;
  }

  void augment_between_imbalanced() {
    while (true) {
      const int32_t s = find_node(+1);
      const int32_t t = find_node(-1);
      if (s < 0 || t < 0) break;
      const ShortestPaths sp = shortest_paths_reduced(inst_, flow_, potential_, delta_, s);
      ++stats_.sp_calls;
      if (!std::isfinite(sp.dist[t])) {
        throw Error(Errc::no_path, "no residual path from vertex " +
                                       std::to_string(s) + " to vertex " +
                                       std::to_string(t));
      }
      for (int32_t u = 0; u < inst_.num_vertices; ++u) {
        if (std::isfinite(sp.dist[u])) potential_[u] -= sp.dist[u];
      }
      // Walk predecessors back from t; pushes update the endpoint imbalances.
      int32_t v = t;
      while (v != s) {
        const int32_t r = sp.pred_road[v];
        if (r < 0) throw Error(Errc::internal, "broken shortest-path tree");
        const bool backward = sp.pred_backward[v] != 0;
        push(r, backward);
        const CcfpRoad& road = inst_.roads[static_cast<size_t>(r)];
        v = backward ? road.head : road.tail;
      }
    }
  }

  void scan_phase_end() {
    for (int32_t r = 0; r < inst_.num_roads(); ++r) {
      for (const bool backward : {false, true}) {
        stats_.min_phase_end_reduced_cost =
            std::min(stats_.min_phase_end_reduced_cost, reduced_cost(r, backward));
      }
    }
  }

  const CcfpInstance& inst_;
  SolveOptions options_;
  std::vector<int64_t> flow_;
  std::vector<double> potential_;
  std::vector<int64_t> excess_;
  int64_t delta_ = 1;
  double drift_tolerance_ = 0.0;
  SolveStats stats_;
};

}  // namespace

SolveResult solve_ccfp(const CcfpInstance& inst, int64_t num_points,
                       const SolveOptions& options) {
  Solver solver(inst, num_points, options);
  SolveResult result = solver.run();
  assert(result.stats.min_phase_end_reduced_cost >=
         -1e-9 * std::max(1.0, inst.total_length));
  return result;
}

}  // namespace roadmatch
