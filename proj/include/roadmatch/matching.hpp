#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roadmatch/ccfp.hpp"
#include "roadmatch/profile.hpp"
#include "roadmatch/roadmap.hpp"

namespace roadmatch {

// Weighted digraph on point vertices plus roadmap vertices whose edges are
// the point-free roadmap intervals. Each edge carries the number of matches
// crossing its interval (weight >= 1) and the interval length (may be zero at
// coordinate ties). Vertex ids: sources first, then targets, then roadmap
// vertices.
struct IntervalGraph {
  int64_t num_sources = 0;
  int64_t num_targets = 0;
  int32_t num_road_vertices = 0;

  struct Edge {
    int32_t tail = 0;
    int32_t head = 0;
    int64_t weight = 0;
    double length = 0.0;
  };
  std::vector<Edge> edges;

  int64_t num_vertices() const { return num_sources + num_targets + num_road_vertices; }
  int32_t source_vertex(int64_t i) const { return static_cast<int32_t>(i); }
  int32_t target_vertex(int64_t j) const { return static_cast<int32_t>(num_sources + j); }
  int32_t road_vertex(int32_t v) const { return static_cast<int32_t>(num_sources + num_targets + v); }

  bool is_source(int32_t v) const { return v < num_sources; }
  bool is_target(int32_t v) const { return v >= num_sources && v < num_sources + num_targets; }
};

struct Matching {
  std::vector<std::pair<int32_t, int32_t>> pairs;  // (index into S, index into T)
  double cost = 0.0;  // sum over interval-graph edges of weight x length
};

// Per road, per interval between consecutive profile breakpoints: an edge
// carrying f + z matches, oriented by sign, absent when zero. The outermost
// interval endpoints are the road's tail and head vertices. O(E + M).
IntervalGraph build_interval_graph(const CcfpInstance& ccfp,
                                   const std::vector<int64_t>& flow);

// Kahn peeling; ready vertices pop in id order. Throws CycleDetected when the
// graph has a directed cycle (possible only at a non-optimal flow).
std::vector<int32_t> topological_order(const IntervalGraph& g);

// Sweeps the vertices in topological order, collecting sources into per-vertex
// FIFO queues, pairing each target with the oldest collected source, and
// forwarding exactly `weight` queued points along every outgoing edge.
Matching construct_matching(const IntervalGraph& g, const std::vector<int32_t>& order);

// Recomputes the matching cost as a sum of point-to-point roadmap distances,
// independent of the flow machinery.
double audit_matching(const MatchingInstance& instance, const Matching& m);
double audit_matching(const MatchingInstance& instance, const Matching& m,
                      const DistanceOracle& metric);

// Largest number of distinct directed paths between any ordered vertex pair.
// Equals at most 1 on a healthy optimal graph; test certificate, intended for
// small graphs.
int64_t max_directed_path_count(const IntervalGraph& g);

}  // namespace roadmatch
