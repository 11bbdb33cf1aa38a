#include "toric/error.hpp"

namespace toric {

std::string_view code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::DegenerateDirection: return "degenerate_direction";
  case ErrorCode::InvalidRational: return "invalid_rational";
  case ErrorCode::TooFewVertices: return "too_few_vertices";
  case ErrorCode::RepeatedVertex: return "repeated_vertex";
  case ErrorCode::CollinearVertices: return "collinear_vertices";
  case ErrorCode::NonConvex: return "non_convex";
  case ErrorCode::NotDelzant: return "not_delzant";
  case ErrorCode::WrongEdgeCount: return "wrong_edge_count";
  case ErrorCode::InvalidParams: return "invalid_params";
  case ErrorCode::InvalidManifold: return "invalid_manifold";
  case ErrorCode::InvalidForm: return "invalid_form";
  case ErrorCode::NonPrimitiveDirection: return "non_primitive_direction";
  case ErrorCode::InvalidGraph: return "invalid_graph";
  case ErrorCode::InteriorFixedSurface: return "interior_fixed_surface";
  case ErrorCode::InvalidFixedData: return "invalid_fixed_data";
  case ErrorCode::InvalidJson: return "invalid_json";
  case ErrorCode::Io: return "io_error";
  }
  return "unknown";
}

} // namespace toric
