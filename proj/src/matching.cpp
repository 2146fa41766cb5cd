#include "roadmatch/matching.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <string>

namespace roadmatch {

IntervalGraph build_interval_graph(const CcfpInstance& ccfp,
                                   const std::vector<int64_t>& flow) {
  IntervalGraph g;
  for (const RoadProfile& p : ccfp.profiles) {
    for (const RoadPoint& pt : p.points) {
      if (pt.is_source) {
        ++g.num_sources;
      } else {
        ++g.num_targets;
      }
    }
  }
  g.num_road_vertices = ccfp.num_vertices;

  auto add_edge = [&g](int32_t earlier, int32_t later, int64_t crossing, double length) {
    if (crossing > 0) {
      g.edges.push_back(IntervalGraph::Edge{earlier, later, crossing, length});
    } else if (crossing < 0) {
      g.edges.push_back(IntervalGraph::Edge{later, earlier, -crossing, length});
    }
  };

  for (int32_t r = 0; r < ccfp.num_roads(); ++r) {
    const CcfpRoad& road = ccfp.roads[static_cast<size_t>(r)];
    const int64_t z = flow[static_cast<size_t>(r)];
    if (road.profile < 0) {
      add_edge(g.road_vertex(road.tail), g.road_vertex(road.head), z, road.length);
      continue;
    }
    const RoadProfile& p = ccfp.profiles[road.profile];
    const size_t intervals = p.prefix.size();
    for (size_t k = 0; k < intervals; ++k) {
      const int32_t earlier =
          k == 0 ? g.road_vertex(road.tail)
                 : (p.points[k - 1].is_source
                        ? g.source_vertex(p.points[k - 1].index)
                        : g.target_vertex(p.points[k - 1].index));
      const int32_t later =
          k + 1 == intervals ? g.road_vertex(road.head)
                             : (p.points[k].is_source
                                    ? g.source_vertex(p.points[k].index)
                                    : g.target_vertex(p.points[k].index));
      add_edge(earlier, later, p.prefix[k] + z,
               p.breakpoints[k + 1] - p.breakpoints[k]);
    }
  }
  return g;
}

std::vector<int32_t> topological_order(const IntervalGraph& g) {
  const int64_t n = g.num_vertices();
  std::vector<int64_t> in_degree(static_cast<size_t>(n), 0);
  std::vector<std::vector<int32_t>> out(static_cast<size_t>(n));
  for (const auto& e : g.edges) {
    ++in_degree[e.head];
    out[e.tail].push_back(e.head);
  }

  std::priority_queue<int32_t, std::vector<int32_t>, std::greater<>> ready;
  for (int64_t v = 0; v < n; ++v) {
    if (in_degree[static_cast<size_t>(v)] == 0) ready.push(static_cast<int32_t>(v));
  }

  std::vector<int32_t> order;
  order.reserve(static_cast<size_t>(n));
  while (!ready.empty()) {
    const int32_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int32_t w : out[v]) {
      if (--in_degree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int64_t>(order.size()) != n) {
    throw Error(Errc::cycle_detected,
                "interval graph has a directed cycle; flow is not optimal");
  }
  return order;
}

Matching construct_matching(const IntervalGraph& g, const std::vector<int32_t>& order) {
  const int64_t n = g.num_vertices();
  if (static_cast<int64_t>(order.size()) != n) {
    throw Error(Errc::corrupt_graph, "order does not cover the vertex set");
  }

  // Outgoing edges grouped per vertex, in edge insertion order.
  std::vector<std::vector<int32_t>> out(static_cast<size_t>(n));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    out[g.edges[i].tail].push_back(static_cast<int32_t>(i));
  }

  Matching m;
  m.pairs.reserve(static_cast<size_t>(g.num_targets));
  long double cost = 0.0L;
  for (const auto& e : g.edges) {
    cost += static_cast<long double>(e.weight) * e.length;
  }
  m.cost = static_cast<double>(cost);

  std::vector<std::list<int32_t>> queue(static_cast<size_t>(n));
  for (const int32_t v : order) {
    std::list<int32_t>& mine = queue[static_cast<size_t>(v)];
    if (g.is_source(v)) {
      mine.push_back(v);
    } else if (g.is_target(v)) {
      if (mine.empty()) {
        throw Error(Errc::empty_queue_at_target,
                    "no collected point available at target vertex " +
                        std::to_string(v));
      }
      const int32_t s = mine.front();
      mine.pop_front();
      m.pairs.emplace_back(s, static_cast<int32_t>(v - g.num_sources));
    }
    for (const int32_t ei : out[v]) {
      const auto& e = g.edges[static_cast<size_t>(ei)];
      std::list<int32_t>& theirs = queue[static_cast<size_t>(e.head)];
      if (e.weight == static_cast<int64_t>(mine.size())) {
        theirs.splice(theirs.end(), mine);
      } else if (e.weight < static_cast<int64_t>(mine.size())) {
        auto split = mine.begin();
        std::advance(split, e.weight);
        theirs.splice(theirs.end(), mine, mine.begin(), split);
      } else {
        throw Error(Errc::corrupt_graph,
                    "edge weight exceeds queued points at vertex " +
                        std::to_string(v));
      }
    }
    if (!mine.empty()) {
      throw Error(Errc::corrupt_graph,
                  "points left behind at vertex " + std::to_string(v));
    }
  }

  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

double audit_matching(const MatchingInstance& instance, const Matching& m,
                      const DistanceOracle& metric) {
  long double total = 0.0L;
  for (const auto& [s, t] : m.pairs) {
    total += metric(instance.sources[static_cast<size_t>(s)],
                    instance.targets[static_cast<size_t>(t)]);
  }
  return static_cast<double>(total);
}

double audit_matching(const MatchingInstance& instance, const Matching& m) {
  const DistanceOracle metric(instance.roadmap);
  return audit_matching(instance, m, metric);
}

int64_t max_directed_path_count(const IntervalGraph& g) {
  const std::vector<int32_t> order = topological_order(g);
  const int64_t n = g.num_vertices();
  std::vector<std::vector<int32_t>> out(static_cast<size_t>(n));
  for (const auto& e : g.edges) out[e.tail].push_back(e.head);

  int64_t worst = 0;
  std::vector<int64_t> ways(static_cast<size_t>(n));
  for (int64_t s = 0; s < n; ++s) {
    std::fill(ways.begin(), ways.end(), 0);
    ways[static_cast<size_t>(s)] = 1;
    for (const int32_t v : order) {
      if (ways[static_cast<size_t>(v)] == 0) continue;
      for (int32_t w : out[v]) {
        ways[static_cast<size_t>(w)] += ways[static_cast<size_t>(v)];
      }
    }
    for (int64_t v = 0; v < n; ++v) {
      if (v != s) worst = std::max(worst, ways[static_cast<size_t>(v)]);
    }
  }
  return worst;
}

}  // namespace roadmatch
