#include "cli_commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "roadmatch/instance_io.hpp"
#include "roadmatch/matching.hpp"
#include "roadmatch/oracles.hpp"
#include "roadmatch/pipeline.hpp"

namespace roadmatch::cli {

namespace {

int exit_code(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return is_input_error(e.code()) ? 1 : 2;
}

int unexpected(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return 2;
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const MatchingInstance instance = validate_instance(load_instance_file(args.instance_path));
    const PipelineResult result = run_pipeline(instance);
    const SolveReport report = build_report(instance, result);

    if (args.audit) {
      const double audited = audit_matching(instance, result.matching);
      if (!approx_equal(audited, result.cost, 1e-9)) {
        throw Error(Errc::oracle_mismatch,
                    "audit cost " + std::to_string(audited) + " != objective " +
                        std::to_string(result.cost));
      }
    }
    if (args.oracle) {
      const Assignment reference = hungarian_min_cost(metric_completion(instance));
      if (!approx_equal(reference.cost, result.cost, 1e-6)) {
        throw Error(Errc::oracle_mismatch,
                    "assignment oracle cost " + std::to_string(reference.cost) +
                        " != pipeline cost " + std::to_string(result.cost));
      }
    }

    const std::string text = report_to_json(report);
    if (args.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(args.output_path, std::ios::binary);
      if (!file) {
        throw Error(Errc::parse_error, "cannot write '" + args.output_path + "'");
      }
      file << text;
    }
    return 0;
  } catch (const Error& e) {
    return exit_code(e, err);
  } catch (const std::exception& e) {
    return unexpected(e, err);
  }
}

int cmd_generate(const GeneratorParams& params, const std::string& output_path,
                 std::ostream& err) {
  try {
    const RawInstance raw = generate_instance(params);
    validate_instance(raw);  // generator output must always pass validation
    write_instance_file(raw, output_path);
    return 0;
  } catch (const Error& e) {
    return exit_code(e, err);
  } catch (const std::exception& e) {
    return unexpected(e, err);
  }
}

int cmd_bench(const std::string& roadmap_path, const std::vector<int64_t>& point_counts,
              uint64_t seed, std::ostream& out, std::ostream& err) {
  try {
    const RawInstance base = load_instance_file(roadmap_path);
    out << "M,ms_total,ms_solve\n";
    for (const int64_t m : point_counts) {
      if (m < 0) throw Error(Errc::invalid_params, "point counts must be >= 0");
      const RawInstance raw = generate_points_on(base, m, seed + static_cast<uint64_t>(m));
      const MatchingInstance instance = validate_instance(raw);
      const PipelineResult result = run_pipeline(instance);
      out << m << "," << result.ms_transcribe + result.ms_solve + result.ms_construct
          << "," << result.ms_solve << "\n";
    }
    return 0;
  } catch (const Error& e) {
    return exit_code(e, err);
  } catch (const std::exception& e) {
    return unexpected(e, err);
  }
}

}  // namespace roadmatch::cli
