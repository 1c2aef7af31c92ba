#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vloci {

enum class ErrorCode {
  kDegenerateLine,
  kAmbiguousOrientation,
  kDegenerateTriangle,
  kInvalidPolygon,
  kCollinearProbe,
  kOutsideDomain,
  kEmptyLineSet,
  kNotAnEllipse,
  kInvalidAxes,
  kInvalidGrid,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library is reported through this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vloci
