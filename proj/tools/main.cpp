#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

namespace {

std::vector<int64_t> parse_point_list(const std::string& csv) {
  std::vector<int64_t> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum-cost bipartite matching between points on a road network"};
  app.require_subcommand(1);

  roadmatch::cli::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file and emit a JSON report");
  solve->add_option("file", solve_args.instance_path, "Instance JSON file")->required();
  solve->add_option("--output", solve_args.output_path, "Write the report here instead of stdout");
  solve->add_flag("--audit", solve_args.audit,
                  "Re-derive the cost from point-to-point distances and compare");
  solve->add_flag("--oracle", solve_args.oracle,
                  "Cross-check against an O(M^3) assignment solver (small M only)");

  roadmatch::GeneratorParams gen;
  std::string gen_output;
  CLI::App* generate = app.add_subcommand("generate", "Write a random instance file");
  generate->add_option("--seed", gen.seed, "RNG seed")->required();
  generate->add_option("--vertices", gen.num_vertices, "Number of vertices")->required();
  generate->add_option("--roads", gen.num_roads, "Number of roads (>= vertices - 1)")->required();
  generate->add_option("--points", gen.num_points, "Points per side (M)")->required();
  generate->add_option("--min-len", gen.min_length, "Minimum road length")->required();
  generate->add_option("--max-len", gen.max_length, "Maximum road length")->required();
  generate->add_option("--output", gen_output, "Output path")->required();

  std::string bench_roadmap;
  std::string bench_points;
  uint64_t bench_seed = 0;
  CLI::App* bench = app.add_subcommand("bench", "Time the pipeline over growing point counts (CSV)");
  bench->add_option("--roadmap", bench_roadmap, "Instance file providing the roadmap")->required();
  bench->add_option("--points", bench_points, "Comma-separated point counts, e.g. 1000,2000")->required();
  bench->add_option("--seed", bench_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (solve->parsed()) {
    return roadmatch::cli::cmd_solve(solve_args, std::cout, std::cerr);
  }
  if (generate->parsed()) {
    return roadmatch::cli::cmd_generate(gen, gen_output, std::cerr);
  }
  if (bench->parsed()) {
    std::vector<int64_t> counts;
    try {
      counts = parse_point_list(bench_points);
    } catch (const std::exception&) {
      std::cerr << "error: invalid --points list '" << bench_points << "'\n";
      return 1;
    }
    return roadmatch::cli::cmd_bench(bench_roadmap, counts, bench_seed, std::cout, std::cerr);
  }
  return 1;
}
