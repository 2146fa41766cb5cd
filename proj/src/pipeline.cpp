#include "roadmatch/pipeline.hpp"

#include <chrono>
#include <cmath>

namespace roadmatch {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

PipelineResult run_pipeline(const MatchingInstance& instance, const SolveOptions& options) {
  PipelineResult out;

  auto t0 = std::chrono::steady_clock::now();
  out.ccfp = build_profiles(instance);
  out.ms_transcribe = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  SolveResult solved = solve_ccfp(out.ccfp, instance.size(), options);
  out.flow = std::move(solved.flow);
  out.stats = solved.stats;
  out.cost = objective_value(out.ccfp, out.flow);
  out.ms_solve = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  out.graph = build_interval_graph(out.ccfp, out.flow);
  const std::vector<int32_t> order = topological_order(out.graph);
  out.matching = construct_matching(out.graph, order);
  out.ms_construct = ms_since(t0);
  return out;
}

SolveReport build_report(const MatchingInstance& instance, const PipelineResult& result) {
  SolveReport report;
  report.cost = result.cost;
  report.stats = result.stats;
  report.ms_transcribe = result.ms_transcribe;
  report.ms_solve = result.ms_solve;
  report.ms_construct = result.ms_construct;

  const DistanceOracle metric(instance.roadmap);
  long double total = 0.0L;
  report.matches.reserve(result.matching.pairs.size());
  for (const auto& [s, t] : result.matching.pairs) {
    const double d = metric(instance.sources[static_cast<size_t>(s)],
                            instance.targets[static_cast<size_t>(t)]);
    report.matches.push_back(MatchRecord{s, t, d});
    total += d;
  }
  if (!approx_equal(static_cast<double>(total), report.cost, 1e-9)) {
    throw Error(Errc::internal,
                "per-pair distances sum to " + std::to_string(static_cast<double>(total)) +
                    " but the objective is " + std::to_string(report.cost));
  }

  report.flow.reserve(result.flow.size());
  for (size_t r = 0; r < result.flow.size(); ++r) {
    report.flow.emplace_back(instance.roadmap.roads[r].id, result.flow[r]);
  }
  return report;
}

}  // namespace roadmatch
