#include "vloci/linear_locus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vloci/error.hpp"
#include "vloci/tolerance.hpp"

namespace vloci {

namespace {

// The gradient is a sum of unit normals, so it is dimensionless and the
// constancy test does not need an instance scale.
bool gradient_vanishes(const LinearForm& v) { return norm(v.gradient()) <= tol::kGeom; }

}  // namespace

LinearForm distance_sum_form(const ConvexPolygon& poly) {
  LinearForm v;
  for (const OrientedLine& side : sides_of(poly)) {
    v.A += side.a();
    v.B += side.b();
    v.C += side.c();
  }
  return v;
}

SumLocus sum_locus(const ConvexPolygon& poly, double k) {
  if (!std::isfinite(k)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "k must be finite");
  }
  const LinearForm v = distance_sum_form(poly);
  if (gradient_vanishes(v)) {
    const double level = v(poly.centroid());
    if (std::abs(k - level) <= tol::kGeom * std::abs(level)) return LocusWholePolygon{};
    return LocusEmpty{};
  }
  const OrientedLine level_line = line_from_coefficients(v.A, v.B, v.C - k);
  const ClipResult clip = clip_line_to_polygon(level_line, poly);
  if (const auto* seg = std::get_if<ClipSegment>(&clip)) {
    return LocusSegment{seg->first, seg->second};
  }
  if (const auto* hit = std::get_if<ClipPoint>(&clip)) return LocusVertex{hit->at};
  return LocusEmpty{};
}

KRange k_range(const ConvexPolygon& poly) {
  const LinearForm v = distance_sum_form(poly);
  KRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Point& p : poly.vertices()) {
    r.k_min = std::min(r.k_min, v(p));
    r.k_max = std::max(r.k_max, v(p));
  }
  return r;
}

LevelLines level_direction(const ConvexPolygon& poly) {
  const LinearForm v = distance_sum_form(poly);
  if (gradient_vanishes(v)) return IsotropicConstant{};
  Point dir{-v.B, v.A};
  dir = (1.0 / norm(dir)) * dir;
  if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) dir = -1.0 * dir;
  return LevelDirection{dir};
}

bool is_viviani(const ConvexPolygon& poly) { return gradient_vanishes(distance_sum_form(poly)); }

bool three_point_test(const ConvexPolygon& poly, Point p1, Point p2, Point p3) {
  const double diag = poly.bounds().diagonal();
  if (std::abs(cross(p2 - p1, p3 - p1)) <= tol::kGeom * diag * diag) {
    throw GeometryError(ErrorCode::kCollinearProbe, "probe points are collinear");
  }
  for (Point p : {p1, p2, p3}) {
    if (!poly.contains(p)) {
      throw GeometryError(ErrorCode::kOutsideDomain, "probe point outside the polygon");
    }
  }
  const LinearForm v = distance_sum_form(poly);
  const double v1 = v(p1);
  const double v2 = v(p2);
  const double v3 = v(p3);
  const double scale = std::max({std::abs(v1), std::abs(v2), std::abs(v3)});
  const double slack = tol::kGeom * scale;
  return std::abs(v1 - v2) <= slack && std::abs(v2 - v3) <= slack && std::abs(v1 - v3) <= slack;
}

}  // namespace vloci
