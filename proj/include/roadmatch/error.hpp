#pragma once

#include <stdexcept>
#include <string>

namespace roadmatch {

// Failure categories surfaced by the library. The first group marks bad
// input; the second group marks a broken internal invariant and should never
// fire on valid inputs.
enum class Errc {
  parse_error,
  non_positive_length,
  dangling_endpoint,
  disconnected,
  cardinality_mismatch,
  coordinate_out_of_range,
  invalid_params,

  unbalanced_supply,
  no_path,
  negative_reduced_cost,
  cycle_detected,
  empty_queue_at_target,
  corrupt_graph,
  oracle_mismatch,
  internal,
};

const char* to_string(Errc code);

// True for errors caused by the input (CLI exit code 1); false for internal
// invariant violations (CLI exit code 2).
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace roadmatch
