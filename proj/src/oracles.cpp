#include "roadmatch/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace roadmatch {

CostMatrix metric_completion(const MatchingInstance& instance) {
  const DistanceOracle metric(instance.roadmap);
  const size_t m = instance.sources.size();
  CostMatrix cost(m, std::vector<double>(m, 0.0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      cost[i][j] = metric(instance.sources[i], instance.targets[j]);
    }
  }
  return cost;
}

Assignment hungarian_min_cost(const CostMatrix& cost) {
  const int32_t n = static_cast<int32_t>(cost.size());
  Assignment result;
  result.target_of.assign(static_cast<size_t>(n), -1);
  if (n == 0) return result;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based arrays; row_of[j] is the row currently assigned to column j,
  // u/v are the dual potentials.
  std::vector<double> u(static_cast<size_t>(n) + 1, 0.0), v(static_cast<size_t>(n) + 1, 0.0);
  std::vector<int32_t> row_of(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
  for (int32_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    int32_t j0 = 0;
    std::vector<double> min_slack(static_cast<size_t>(n) + 1, kInf);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    do {
      used[static_cast<size_t>(j0)] = 1;
      const int32_t i0 = row_of[static_cast<size_t>(j0)];
      double delta = kInf;
      int32_t j1 = 0;
      for (int32_t j = 1; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        const double cur = cost[static_cast<size_t>(i0 - 1)][static_cast<size_t>(j - 1)] -
                           u[static_cast<size_t>(i0)] - v[static_cast<size_t>(j)];
        if (cur < min_slack[static_cast<size_t>(j)]) {
          min_slack[static_cast<size_t>(j)] = cur;
          way[static_cast<size_t>(j)] = j0;
        }
        if (min_slack[static_cast<size_t>(j)] < delta) {
          delta = min_slack[static_cast<size_t>(j)];
          j1 = j;
        }
      }
      for (int32_t j = 0; j <= n; ++j) {
        if (used[static_cast<size_t>(j)]) {
          u[static_cast<size_t>(row_of[static_cast<size_t>(j)])] += delta;
          v[static_cast<size_t>(j)] -= delta;
        } else {
          min_slack[static_cast<size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[static_cast<size_t>(j0)] != 0);
    do {
      const int32_t j1 = way[static_cast<size_t>(j0)];
      row_of[static_cast<size_t>(j0)] = row_of[static_cast<size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  long double total = 0.0L;
  for (int32_t j = 1; j <= n; ++j) {
    result.target_of[static_cast<size_t>(row_of[static_cast<size_t>(j)] - 1)] = j - 1;
    total += cost[static_cast<size_t>(row_of[static_cast<size_t>(j)] - 1)][static_cast<size_t>(j - 1)];
  }
  result.cost = static_cast<double>(total);
  return result;
}

double min_cost_by_enumeration(const CostMatrix& cost) {
  const size_t n = cost.size();
  std::vector<int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  if (n == 0) return 0.0;
  do {
    long double total = 0.0L;
    for (size_t i = 0; i < n; ++i) total += cost[i][static_cast<size_t>(perm[i])];
    best = std::min(best, static_cast<double>(total));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

LineMatch line_match(const std::vector<double>& s, const std::vector<double>& t) {
  const size_t m = s.size();
  std::vector<int32_t> si(m), ti(m);
  std::iota(si.begin(), si.end(), 0);
  std::iota(ti.begin(), ti.end(), 0);
  std::stable_sort(si.begin(), si.end(),
                   [&s](int32_t a, int32_t b) { return s[static_cast<size_t>(a)] < s[static_cast<size_t>(b)]; });
  std::stable_sort(ti.begin(), ti.end(),
                   [&t](int32_t a, int32_t b) { return t[static_cast<size_t>(a)] < t[static_cast<size_t>(b)]; });

  LineMatch out;
  out.pairs.reserve(m);
  long double total = 0.0L;
  for (size_t k = 0; k < m; ++k) {
    out.pairs.emplace_back(si[k], ti[k]);
    total += std::abs(s[static_cast<size_t>(si[k])] - t[static_cast<size_t>(ti[k])]);
  }
  out.cost = static_cast<double>(total);
  return out;
}

double circle_min_cost(const std::vector<double>& s, const std::vector<double>& t,
                       double circumference) {
  struct Event {
    double y;
    int step;
  };
  std::vector<Event> events;
  events.reserve(s.size() + t.size());
  for (double y : s) events.push_back(Event{y, +1});
  for (double y : t) events.push_back(Event{y, -1});
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) { return a.y < b.y; });

  // Interval decomposition of the running count, then scan every winding
  // offset directly; no convexity shortcut so this stays independent of the
  // solver's reasoning.
  std::vector<double> length;
  std::vector<int64_t> count;
  double prev = 0.0;
  int64_t running = 0;
  for (const Event& e : events) {
    length.push_back(e.y - prev);
    count.push_back(running);
    prev = e.y;
    running += e.step;
  }
  length.push_back(circumference - prev);
  count.push_back(running);

  const int64_t m = static_cast<int64_t>(s.size());
  double best = std::numeric_limits<double>::infinity();
  for (int64_t z = -m; z <= m; ++z) {
    long double total = 0.0L;
    for (size_t k = 0; k < length.size(); ++k) {
      total += length[k] * static_cast<long double>(std::abs(count[k] + z));
    }
    best = std::min(best, static_cast<double>(total));
  }
  return best;
}

}  // namespace roadmatch
