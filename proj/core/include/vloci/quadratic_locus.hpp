#pragma once

#include <span>
#include <variant>
#include <vector>

#include "vloci/geometry.hpp"

namespace vloci {

/// Q(x, y) = A x^2 + B xy + C y^2 + D x + E y + F0.
///
/// Built from normalized lines the trace A + C equals the number of lines,
/// which fixes the scale of the representation.
struct QuadraticForm {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  double F0 = 0.0;

  double operator()(Point p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F0;
  }
};

/// Sum of squared signed distances to every line. Throws EmptyLineSet.
QuadraticForm squared_sum_form(std::span<const OrientedLine> lines);

/// B^2 - 4AC.
double discriminant(const QuadraticForm& q);

struct UniquePoint {
  Point at;
};
struct LineOfMinima {
  OrientedLine line;
};
using Minimizer = std::variant<UniquePoint, LineOfMinima>;

struct SquaredMinimum {
  double k_min;
  Minimizer argmin;
};

/// Minimum of the squared-distance sum. A single line or a parallel pencil
/// yields LineOfMinima.
SquaredMinimum min_squared_sum(std::span<const OrientedLine> lines);

struct EllipseGeometry {
  Point center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double rotation = 0.0;  // major axis angle from +x, in [0, pi)

  /// Point at parameter t of x = center + R(rotation) (a cos t, b sin t).
  Point at(double t) const;
};

enum class NonEllipticKind { kParallelPencil, kOther };

struct LocusNone {};
struct LocusPoint {
  Point at;
};
struct LocusEllipse {
  EllipseGeometry geometry;
};
struct LocusNonElliptic {
  NonEllipticKind kind;
  /// For a parallel pencil: the one or two lines making up the locus.
  std::vector<OrientedLine> lines;
};
using SquaredLocus = std::variant<LocusNone, LocusPoint, LocusEllipse, LocusNonElliptic>;

SquaredLocus classify_squared_locus(std::span<const OrientedLine> lines, double k);

/// Center, semi-axes and rotation of the level set Q = k.
/// Throws NotAnEllipse unless classify_squared_locus reports an ellipse.
EllipseGeometry ellipse_geometry(std::span<const OrientedLine> lines, double k);

/// The squared-distance locus of the triangle is a circle.
bool is_circle_locus(const Triangle& t);

}  // namespace vloci
