#include "roadmatch/error.hpp"

namespace roadmatch {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::non_positive_length: return "NonPositiveLength";
    case Errc::dangling_endpoint: return "DanglingEndpoint";
    case Errc::disconnected: return "Disconnected";
    case Errc::cardinality_mismatch: return "CardinalityMismatch";
    case Errc::coordinate_out_of_range: return "CoordinateOutOfRange";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::unbalanced_supply: return "UnbalancedSupply";
    case Errc::no_path: return "NoPath";
    case Errc::negative_reduced_cost: return "NegativeReducedCost";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::empty_queue_at_target: return "EmptyQueueAtT";
    case Errc::corrupt_graph: return "CorruptGraph";
    case Errc::oracle_mismatch: return "OracleMismatch";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::non_positive_length:
    case Errc::dangling_endpoint:
    case Errc::disconnected:
    case Errc::cardinality_mismatch:
    case Errc::coordinate_out_of_range:
    case Errc::invalid_params:
      return true;
    default:
      return false;
  }
}

}  // namespace roadmatch
