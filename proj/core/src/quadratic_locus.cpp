#include "vloci/quadratic_locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vloci/error.hpp"
#include "vloci/tolerance.hpp"

namespace vloci {

namespace {

double squared_sum_at(std::span<const OrientedLine> lines, Point p) {
  double sum = 0.0;
  for (const OrientedLine& line : lines) sum += line(p) * line(p);
  return sum;
}

// 4AC - B^2, the determinant of the stationarity system.
double stationarity_det(const QuadraticForm& q) { return 4.0 * q.A * q.C - q.B * q.B; }

bool is_rank_one(const QuadraticForm& q) {
  const double trace = q.A + q.C;
  return stationarity_det(q) <= tol::kRank * trace * trace;
}

// Unit eigenvector of the larger eigenvalue of [[A, B/2], [B/2, C]].
// Sign fixed so that x > 0, or y > 0 when x == 0.
Point dominant_axis(const QuadraticForm& q) {
  const double h = 0.5 * q.B;
  const double big = 0.5 * (q.A + q.C) + std::hypot(0.5 * (q.A - q.C), h);
  const Point u{h, big - q.A};
  const Point w{big - q.C, h};
  Point v = norm(u) >= norm(w) ? u : w;
  v = (1.0 / norm(v)) * v;
  if (v.x < 0 || (v.x == 0 && v.y < 0)) v = -1.0 * v;
  return v;
}

}  // namespace

QuadraticForm squared_sum_form(std::span<const OrientedLine> lines) {
  if (lines.empty()) throw GeometryError(ErrorCode::kEmptyLineSet, "no lines given");
  QuadraticForm q;
  for (const OrientedLine& l : lines) {
    q.A += l.a() * l.a();
    q.B += 2.0 * l.a() * l.b();
    q.C += l.b() * l.b();
    q.D += 2.0 * l.a() * l.c();
    q.E += 2.0 * l.b() * l.c();
    q.F0 += l.c() * l.c();
  }
  return q;
}

double discriminant(const QuadraticForm& q) { return q.B * q.B - 4.0 * q.A * q.C; }

SquaredMinimum min_squared_sum(std::span<const OrientedLine> lines) {
  const QuadraticForm q = squared_sum_form(lines);
  if (is_rank_one(q)) {
    // Q restricted to s = n.x is trace * s^2 + (g.n) s + F0.
    const Point n = dominant_axis(q);
    const double s = -dot({q.D, q.E}, n) / (2.0 * (q.A + q.C));
    const Point foot = s * n;
    return {squared_sum_at(lines, foot), LineOfMinima{line_from_coefficients(n.x, n.y, -s)}};
  }
  const double det = stationarity_det(q);
  const Point at{(q.B * q.E - 2.0 * q.C * q.D) / det, (q.B * q.D - 2.0 * q.A * q.E) / det};
  return {squared_sum_at(lines, at), UniquePoint{at}};
}

Point EllipseGeometry::at(double t) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  const double u = semi_major * std::cos(t);
  const double v = semi_minor * std::sin(t);
  return {center.x + c * u - s * v, center.y + s * u + c * v};
}

SquaredLocus classify_squared_locus(std::span<const OrientedLine> lines, double k) {
  if (!std::isfinite(k)) throw GeometryError(ErrorCode::kInvalidArgument, "k must be finite");
  const SquaredMinimum min = min_squared_sum(lines);
  const double slack = tol::kLocus * std::max(1.0, min.k_min);
  const double excess = k - min.k_min;
  if (excess < -slack) return LocusNone{};

  if (const auto* pencil = std::get_if<LineOfMinima>(&min.argmin)) {
    LocusNonElliptic out{NonEllipticKind::kParallelPencil, {}};
    if (excess <= slack) {
      out.lines.push_back(pencil->line);
      return out;
    }
    const QuadraticForm q = squared_sum_form(lines);
    const double offset = std::sqrt(excess / (q.A + q.C));
    const OrientedLine& mid = pencil->line;
    out.lines.push_back(line_from_coefficients(mid.a(), mid.b(), mid.c() - offset));
    out.lines.push_back(line_from_coefficients(mid.a(), mid.b(), mid.c() + offset));
    return out;
  }

  const Point center = std::get<UniquePoint>(min.argmin).at;
  if (std::abs(excess) <= slack) return LocusPoint{center};

  const QuadraticForm q = squared_sum_form(lines);
  if (!(discriminant(q) < 0)) return LocusNonElliptic{NonEllipticKind::kOther, {}};

  const double mean = 0.5 * (q.A + q.C);
  const double radius = std::hypot(0.5 * (q.A - q.C), 0.5 * q.B);
  const double big = mean + radius;
  const double small = (q.A * q.C - 0.25 * q.B * q.B) / big;

  EllipseGeometry e;
  e.center = center;
  e.semi_major = std::sqrt(excess / small);
  e.semi_minor = std::sqrt(excess / big);
  if (big - small > tol::kEigenTie * (big + small)) {
    // Major axis follows the smaller eigenvalue, a quarter turn from the
    // dominant eigenvector.
    double angle = 0.5 * std::atan2(q.B, q.A - q.C) + 0.5 * std::numbers::pi;
    angle = std::fmod(angle, std::numbers::pi);
    if (angle < 0) angle += std::numbers::pi;
    if (angle >= std::numbers::pi - 1e-12) angle = 0.0;
    e.rotation = angle;
  }
  return LocusEllipse{e};
}

EllipseGeometry ellipse_geometry(std::span<const OrientedLine> lines, double k) {
  const SquaredLocus locus = classify_squared_locus(lines, k);
  if (const auto* e = std::get_if<LocusEllipse>(&locus)) return e->geometry;
  throw GeometryError(ErrorCode::kNotAnEllipse, "level set is not a proper ellipse");
}

bool is_circle_locus(const Triangle& t) {
  const auto sides = sides_of(ConvexPolygon(t));
  const QuadraticForm q = squared_sum_form(sides);
  const double trace = q.A + q.C;
  return std::abs(q.A - q.C) <= tol::kGeom * trace && std::abs(q.B) <= tol::kGeom * trace;
}

}  // namespace vloci
