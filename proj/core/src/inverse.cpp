#include "vloci/inverse.hpp"

#include <cmath>

#include "vloci/error.hpp"

namespace vloci {

namespace {

double level_for_unit_rhs(double a2, double b2) {
  const double numer = 2.0 * a2 * (a2 * a2 + 7.0 * a2 * b2 + 10.0 * b2 * b2);
  return numer / ((a2 + b2) * (a2 + 3.0 * b2));
}

}  // namespace

InverseResult triangle_from_ellipse(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(beta > 0) || beta > alpha) {
    throw GeometryError(ErrorCode::kInvalidAxes, "require alpha >= beta > 0");
  }
  // alpha^2 = a^2 + 3b^2 and beta^2 = 2a^2.
  const double a2 = 0.5 * beta * beta;
  const double b2 = (alpha * alpha - a2) / 3.0;
  const double a = std::sqrt(a2);
  const double b = std::sqrt(b2);
  const double l = 2.0 * a * b2 / (a2 + 3.0 * b2);
  return {Triangle({0.0, a - l}, {-b, -l}, {b, -l}), level_for_unit_rhs(a2, b2), {a, b, l}};
}

double canonical_rhs(double a, double b, double k) {
  if (!(a > 0) || !(b > 0)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "a and b must be positive");
  }
  const double a2 = a * a;
  const double b2 = b * b;
  const double s = a2 + 3.0 * b2;
  return ((a2 + b2) * k - 2.0 * a2 * b2) / (2.0 * a2 * s) + 2.0 * b2 * b2 / (s * s);
}

}  // namespace vloci
