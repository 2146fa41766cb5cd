#include "roadmatch/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace roadmatch {

namespace {

std::vector<Address> resolve_addresses(const std::vector<RawAddress>& raw,
                                       const Roadmap& rm, const char* side) {
  std::vector<Address> out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    auto it = rm.road_index.find(raw[i].road);
    if (it == rm.road_index.end()) {
      throw Error(Errc::parse_error, std::string(side) + "[" +
                                         std::to_string(i) +
                                         "] references unknown road '" +
                                         raw[i].road + "'");
    }
    const Road& road = rm.roads[it->second];
    const double y = raw[i].y;
    if (!(y >= 0.0 && y <= road.length)) {
      throw Error(Errc::coordinate_out_of_range,
                  std::string(side) + "[" + std::to_string(i) + "] at y=" +
                      std::to_string(y) + " outside [0, " +
                      std::to_string(road.length) + "] of road '" +
                      raw[i].road + "'");
    }
    out.push_back(Address{it->second, y});
  }
  return out;
}

}  // namespace

MatchingInstance validate_instance(const RawInstance& raw) {
  MatchingInstance inst;
  Roadmap& rm = inst.roadmap;

  rm.vertex_ids = raw.vertices;
  for (size_t i = 0; i < rm.vertex_ids.size(); ++i) {
    auto [it, inserted] =
        rm.vertex_index.emplace(rm.vertex_ids[i], static_cast<int32_t>(i));
    if (!inserted) {
      throw Error(Errc::parse_error, "duplicate vertex id '" + rm.vertex_ids[i] + "'");
    }
  }

  rm.roads.reserve(raw.roads.size());
  rm.incident.assign(rm.vertex_ids.size(), {});
  for (const RawRoad& rr : raw.roads) {
    if (!(std::isfinite(rr.length) && rr.length > 0.0)) {
      throw Error(Errc::non_positive_length,
                  "road '" + rr.id + "' has length " + std::to_string(rr.length));
    }
    auto tail = rm.vertex_index.find(rr.tail);
    auto head = rm.vertex_index.find(rr.head);
    if (tail == rm.vertex_index.end() || head == rm.vertex_index.end()) {
      throw Error(Errc::dangling_endpoint,
                  "road '" + rr.id + "' references unknown vertex '" +
                      (tail == rm.vertex_index.end() ? rr.tail : rr.head) + "'");
    }
    const int32_t idx = rm.num_roads();
    auto [it, inserted] = rm.road_index.emplace(rr.id, idx);
    if (!inserted) {
      throw Error(Errc::parse_error, "duplicate road id '" + rr.id + "'");
    }
    rm.roads.push_back(Road{rr.id, tail->second, head->second, rr.length});
    rm.incident[tail->second].push_back(idx);
    if (head->second != tail->second) rm.incident[head->second].push_back(idx);
    rm.total_length += rr.length;
  }

  // Connectivity over the undirected graph.
  if (rm.num_vertices() > 1) {
    std::vector<char> seen(rm.vertex_ids.size(), 0);
    std::vector<int32_t> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      const int32_t u = stack.back();
      stack.pop_back();
      for (int32_t r : rm.incident[u]) {
        const int32_t other = rm.roads[r].tail == u ? rm.roads[r].head : rm.roads[r].tail;
        if (!seen[other]) {
          seen[other] = 1;
          ++reached;
          stack.push_back(other);
        }
      }
    }
    if (reached != rm.vertex_ids.size()) {
      throw Error(Errc::disconnected,
                  "roadmap has unreachable vertices (" +
                      std::to_string(rm.vertex_ids.size() - reached) +
                      " of " + std::to_string(rm.vertex_ids.size()) + ")");
    }
  }

  if (raw.sources.size() != raw.targets.size()) {
    throw Error(Errc::cardinality_mismatch,
                "|S| = " + std::to_string(raw.sources.size()) +
                    " but |T| = " + std::to_string(raw.targets.size()));
  }
  inst.sources = resolve_addresses(raw.sources, rm, "S");
  inst.targets = resolve_addresses(raw.targets, rm, "T");
  return inst;
}

std::vector<double> single_source_distances(const Roadmap& rm, int32_t source) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(rm.vertex_ids.size(), kInf);
  using Entry = std::pair<double, int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (int32_t r : rm.incident[u]) {
      const Road& road = rm.roads[r];
      const int32_t v = road.tail == u ? road.head : road.tail;
      const double nd = d + road.length;
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

namespace {

// Minimum over the four endpoint routes given vertex-to-vertex distances from
// both endpoints of a's road.
double endpoint_route_distance(const Roadmap& rm, const Address& a,
                               const Address& b,
                               const std::vector<double>& from_tail,
                               const std::vector<double>& from_head) {
  const Road& rb = rm.roads[b.road];
  const double b_tail = b.y;
  const double b_head = rb.length - b.y;
  const Road& ra = rm.roads[a.road];
  const double a_tail = a.y;
  const double a_head = ra.length - a.y;
  double best = a_tail + from_tail[rb.tail] + b_tail;
  best = std::min(best, a_tail + from_tail[rb.head] + b_head);
  best = std::min(best, a_head + from_head[rb.tail] + b_tail);
  best = std::min(best, a_head + from_head[rb.head] + b_head);
  return best;
}

}  // namespace

double roadmap_distance(const Roadmap& rm, const Address& a, const Address& b) {
  const std::vector<double> from_tail = single_source_distances(rm, rm.roads[a.road].tail);
  const std::vector<double> from_head = single_source_distances(rm, rm.roads[a.road].head);
  double best = endpoint_route_distance(rm, a, b, from_tail, from_head);
  if (a.road == b.road) best = std::min(best, std::abs(a.y - b.y));
  return best;
}

DistanceOracle::DistanceOracle(const Roadmap& rm)
    : rm_(rm), n_(rm.vertex_ids.size()), dist_(n_ * n_, 0.0) {
  for (size_t u = 0; u < n_; ++u) {
    const std::vector<double> d = single_source_distances(rm, static_cast<int32_t>(u));
    std::copy(d.begin(), d.end(), dist_.begin() + u * n_);
  }
}

double DistanceOracle::operator()(const Address& a, const Address& b) const {
  const Road& ra = rm_.roads[a.road];
  const Road& rb = rm_.roads[b.road];
  const double a_tail = a.y;
  const double a_head = ra.length - a.y;
  const double b_tail = b.y;
  const double b_head = rb.length - b.y;
  double best = a_tail + vertex_distance(ra.tail, rb.tail) + b_tail;
  best = std::min(best, a_tail + vertex_distance(ra.tail, rb.head) + b_head);
  best = std::min(best, a_head + vertex_distance(ra.head, rb.tail) + b_tail);
  best = std::min(best, a_head + vertex_distance(ra.head, rb.head) + b_head);
  if (a.road == b.road) best = std::min(best, std::abs(a.y - b.y));
  return best;
}

}  // namespace roadmatch
