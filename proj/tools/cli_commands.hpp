#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "roadmatch/generator.hpp"

namespace roadmatch::cli {

struct SolveArgs {
  std::string instance_path;
  std::string output_path;  // empty = stdout
  bool audit = false;
  bool oracle = false;
};

// Exit codes: 0 success, 1 validation/parse error, 2 internal invariant
// violation (including audit/oracle mismatches).
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

int cmd_generate(const GeneratorParams& params, const std::string& output_path,
                 std::ostream& err);

int cmd_bench(const std::string& roadmap_path, const std::vector<int64_t>& point_counts,
              uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace roadmatch::cli
