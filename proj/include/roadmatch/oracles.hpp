#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "roadmatch/roadmap.hpp"

namespace roadmatch {

// Reference solvers used to certify the main pipeline. Simple and slow on
// purpose; never on the production path.

using CostMatrix = std::vector<std::vector<double>>;

// Complete bipartite matrix of roadmap distances, entry (i, j) = d(S_i, T_j).
CostMatrix metric_completion(const MatchingInstance& instance);

struct Assignment {
  std::vector<int32_t> target_of;  // column assigned to each row
  double cost = 0.0;
};

// Exact minimum-cost assignment on a square matrix, O(M^3) potentials method.
Assignment hungarian_min_cost(const CostMatrix& cost);

// Minimum over all permutations; exponential, for cross-checking tiny cases.
double min_cost_by_enumeration(const CostMatrix& cost);

struct LineMatch {
  std::vector<std::pair<int32_t, int32_t>> pairs;
  double cost = 0.0;
};

// Points on a segment: sort both sides and pair by rank.
LineMatch line_match(const std::vector<double>& s, const std::vector<double>& t);

// Points on a circle: decompose the running count into intervals and take the
// cheapest integer winding offset by brute force over [-M, M].
double circle_min_cost(const std::vector<double>& s, const std::vector<double>& t,
                       double circumference);

}  // namespace roadmatch
