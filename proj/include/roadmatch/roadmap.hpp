#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "roadmatch/error.hpp"

namespace roadmatch {

// One road of the network. Roads are undirected for travel but carry a fixed
// orientation: coordinate 0 sits at `tail`, coordinate `length` at `head`.
struct Road {
  std::string id;
  int32_t tail = 0;
  int32_t head = 0;
  double length = 0.0;
};

// Connected undirected weighted multigraph. Self-loops and parallel roads are
// allowed; points live at real coordinates along the roads.
struct Roadmap {
  std::vector<std::string> vertex_ids;
  std::vector<Road> roads;
  std::unordered_map<std::string, int32_t> vertex_index;
  std::unordered_map<std::string, int32_t> road_index;
  std::vector<std::vector<int32_t>> incident;  // road indices per vertex
  double total_length = 0.0;

  int32_t num_vertices() const { return static_cast<int32_t>(vertex_ids.size()); }
  int32_t num_roads() const { return static_cast<int32_t>(roads.size()); }
};

// A point on the roadmap continuum: a road and an offset from its tail,
// 0 <= y <= length.
struct Address {
  int32_t road = 0;
  double y = 0.0;
};

struct MatchingInstance {
  Roadmap roadmap;
  std::vector<Address> sources;  // pickup points
  std::vector<Address> targets;  // delivery points

  int64_t size() const { return static_cast<int64_t>(sources.size()); }
};

// String-keyed form of an instance as it appears in input files, before
// validation resolves ids to dense indices.
struct RawRoad {
  std::string id;
  std::string tail;
  std::string head;
  double length = 0.0;
};

struct RawAddress {
  std::string road;
  double y = 0.0;
};

struct RawInstance {
  std::vector<std::string> vertices;
  std::vector<RawRoad> roads;
  std::vector<RawAddress> sources;
  std::vector<RawAddress> targets;
};

// Checks lengths, endpoint references, connectivity, cardinality and
// coordinate ranges; maps string ids to dense indices.
MatchingInstance validate_instance(const RawInstance& raw);

// Nonnegative-weight shortest-path distances from one vertex to all others,
// with edge weights equal to road lengths.
std::vector<double> single_source_distances(const Roadmap& rm, int32_t source);

// Exact shortest-path distance between two addresses: the minimum of the
// same-road offset difference (when applicable) and the four routes through
// road endpoints.
double roadmap_distance(const Roadmap& rm, const Address& a, const Address& b);

// Precomputes all vertex-to-vertex distances so address queries are O(1).
// Intended for repeated queries (cost matrices, audits, reports).
class DistanceOracle {
 public:
  explicit DistanceOracle(const Roadmap& rm);

  double operator()(const Address& a, const Address& b) const;
  double vertex_distance(int32_t u, int32_t v) const {
    return dist_[static_cast<size_t>(u) * n_ + v];
  }

 private:
  const Roadmap& rm_;
  size_t n_;
  std::vector<double> dist_;
};

}  // namespace roadmatch
