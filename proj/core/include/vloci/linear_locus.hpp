#pragma once

#include <variant>

#include "vloci/geometry.hpp"

namespace vloci {

/// Distance sum V(x, y) = A*x + B*y + C, valid on the closed polygon.
struct LinearForm {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  double operator()(Point p) const { return A * p.x + B * p.y + C; }
  Point gradient() const { return {A, B}; }
};

LinearForm distance_sum_form(const ConvexPolygon& poly);

struct LocusEmpty {};
struct LocusVertex {
  Point at;
};
struct LocusSegment {
  Point first;
  Point second;
};
struct LocusWholePolygon {};
using SumLocus = std::variant<LocusEmpty, LocusVertex, LocusSegment, LocusWholePolygon>;

/// Points of the closed polygon where the distance sum equals k.
SumLocus sum_locus(const ConvexPolygon& poly, double k);

struct KRange {
  double k_min;
  double k_max;
};

/// Extremes of V over the polygon, attained at vertices.
KRange k_range(const ConvexPolygon& poly);

struct LevelDirection {
  Point unit;  // sign fixed so that x > 0, or y > 0 when x == 0
};
struct IsotropicConstant {};
using LevelLines = std::variant<LevelDirection, IsotropicConstant>;

LevelLines level_direction(const ConvexPolygon& poly);

/// True when V is constant on the polygon (vanishing gradient).
bool is_viviani(const ConvexPolygon& poly);

/// Compares V at three non-collinear points of the polygon.
/// Throws CollinearProbe or OutsideDomain when the probe is unusable.
bool three_point_test(const ConvexPolygon& poly, Point p1, Point p2, Point p3);

}  // namespace vloci
