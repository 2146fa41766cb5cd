#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "roadmatch/profile.hpp"

namespace roadmatch {

struct SolveStats {
  int64_t phases = 0;
  int64_t sp_calls = 0;
  int64_t saturation_pushes = 0;
  // Most negative reduced cost observed over all residual arcs at the end of
  // each scaling phase. A healthy run keeps this above
  // -1e-9 * total roadmap length (float drift only).
  double min_phase_end_reduced_cost = std::numeric_limits<double>::infinity();
};

struct SolveResult {
  std::vector<int64_t> flow;  // z per road
  SolveStats stats;
};

struct SolveOptions {
  // Scan every residual arc at each phase end and record the minimum reduced
  // cost. Cheap (phases x 2E evaluations); on by default.
  bool scan_phase_invariant = true;
};

// Capacity-scaling solve of the convex cost flow problem: minimize the sum of
// road costs subject to flow conservation against the vertex supplies.
// Returns an integral optimum. `num_points` bounds the total supply.
SolveResult solve_ccfp(const CcfpInstance& inst, int64_t num_points,
                       const SolveOptions& options = {});

// Sum of road costs at a given integral flow.
double objective_value(const CcfpInstance& inst, const std::vector<int64_t>& flow);

// e(u) = b(u) + inflow - outflow, all in exact integer arithmetic. All-zero
// exactly when the flow is feasible.
std::vector<int64_t> vertex_imbalances(const CcfpInstance& inst,
                                       const std::vector<int64_t>& flow);

// Shortest-path distances from `source` over the delta-residual arcs (both
// directions of every road) under reduced costs
//   c_pi(a) = cost_delta(a) - potential[arc tail] + potential[arc head].
// Requires nonnegative reduced costs; ties resolve deterministically by
// vertex id and road order.
struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int32_t> pred_road;      // -1 where no predecessor
  std::vector<uint8_t> pred_backward;  // 1 if the incoming arc runs head->tail
};

ShortestPaths shortest_paths_reduced(const CcfpInstance& inst,
                                     const std::vector<int64_t>& flow,
                                     const std::vector<double>& potential,
                                     int64_t delta, int32_t source);

}  // namespace roadmatch
