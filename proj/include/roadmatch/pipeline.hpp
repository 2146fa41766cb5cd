#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roadmatch/ccfp.hpp"
#include "roadmatch/matching.hpp"
#include "roadmatch/profile.hpp"
#include "roadmatch/roadmap.hpp"

namespace roadmatch {

// Full run of transcribe -> solve -> interval graph -> topological order ->
// matching, with per-stage wall times.
struct PipelineResult {
  CcfpInstance ccfp;
  std::vector<int64_t> flow;
  SolveStats stats;
  IntervalGraph graph;
  Matching matching;
  double cost = 0.0;  // objective at the returned flow
  double ms_transcribe = 0.0;
  double ms_solve = 0.0;
  double ms_construct = 0.0;
};

PipelineResult run_pipeline(const MatchingInstance& instance,
                            const SolveOptions& options = {});

struct MatchRecord {
  int32_t s = 0;
  int32_t t = 0;
  double distance = 0.0;
};

struct SolveReport {
  double cost = 0.0;
  std::vector<MatchRecord> matches;
  std::vector<std::pair<std::string, int64_t>> flow;  // road id -> z
  SolveStats stats;
  double ms_transcribe = 0.0;
  double ms_solve = 0.0;
  double ms_construct = 0.0;
};

// Attaches per-pair roadmap distances and road ids to a pipeline result.
// Verifies that the distances sum back to the reported cost.
SolveReport build_report(const MatchingInstance& instance, const PipelineResult& result);

// |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(double a, double b, double tol);

}  // namespace roadmatch
