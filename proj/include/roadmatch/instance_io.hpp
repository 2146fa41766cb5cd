#pragma once

#include <string>

#include "roadmatch/pipeline.hpp"
#include "roadmatch/roadmap.hpp"

namespace roadmatch {

// Instance files are UTF-8 JSON:
//   { "vertices": ["u", "v", ...],
//     "roads":    [ {"id": "r1", "tail": "u", "head": "v", "length": 1.0}, ... ],
//     "S":        [ {"road": "r1", "y": 0.5}, ... ],
//     "T":        [ {"road": "r2", "y": 0.5}, ... ] }
RawInstance parse_instance_json(const std::string& text);
RawInstance load_instance_file(const std::string& path);

std::string instance_to_json(const RawInstance& raw);
void write_instance_file(const RawInstance& raw, const std::string& path);

std::string report_to_json(const SolveReport& report);

}  // namespace roadmatch
