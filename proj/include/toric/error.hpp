#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  DegenerateDirection,
  InvalidRational,
  TooFewVertices,
  RepeatedVertex,
  CollinearVertices,
  NonConvex,
  NotDelzant,
  WrongEdgeCount,
  InvalidParams,
  InvalidManifold,
  InvalidForm,
  NonPrimitiveDirection,
  InvalidGraph,
  InteriorFixedSurface,
  InvalidFixedData,
  InvalidJson,
  Io,
};

/// Stable machine-readable name, used in CLI error objects.
std::string_view code_name(ErrorCode code);

/// Domain error raised by every operation in the library.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace toric
