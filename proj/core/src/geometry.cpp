#include "vloci/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "vloci/error.hpp"
#include "vloci/tolerance.hpp"

namespace vloci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateLine: return "DegenerateLine";
    case ErrorCode::kAmbiguousOrientation: return "AmbiguousOrientation";
    case ErrorCode::kDegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::kInvalidPolygon: return "InvalidPolygon";
    case ErrorCode::kCollinearProbe: return "CollinearProbe";
    case ErrorCode::kOutsideDomain: return "OutsideDomain";
    case ErrorCode::kEmptyLineSet: return "EmptyLineSet";
    case ErrorCode::kNotAnEllipse: return "NotAnEllipse";
    case ErrorCode::kInvalidAxes: return "InvalidAxes";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Bounds Bounds::expanded(double fraction) const {
  const double dx = fraction * width();
  const double dy = fraction * height();
  return {{min.x - dx, min.y - dy}, {max.x + dx, max.y + dy}};
}

Bounds bounds_of(std::span<const Point> points) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Bounds b{{inf, inf}, {-inf, -inf}};
  for (const Point& p : points) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double point_scale(Point p, Point q) {
  return std::max({1.0, std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y)});
}

}  // namespace

OrientedLine line_through(Point p, Point q) {
  if (!finite(p) || !finite(q)) {
    throw GeometryError(ErrorCode::kDegenerateLine, "line through non-finite point");
  }
  const Point d = q - p;
  const double len = norm(d);
  if (len <= tol::kNormalization * point_scale(p, q)) {
    throw GeometryError(ErrorCode::kDegenerateLine, "line through coincident points");
  }
  const double a = -d.y / len;
  const double b = d.x / len;
  return OrientedLine(a, b, -(a * p.x + b * p.y));
}

OrientedLine make_oriented_line(Point p, Point q, Point positive_side_hint) {
  OrientedLine line = line_through(p, q);
  const double s = line(positive_side_hint);
  if (!std::isfinite(s) || std::abs(s) <= tol::kNormalization) {
    throw GeometryError(ErrorCode::kAmbiguousOrientation,
                        "orientation hint lies on the line");
  }
  return s > 0 ? line : line.flipped();
}

OrientedLine line_from_coefficients(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw GeometryError(ErrorCode::kDegenerateLine, "line with zero normal");
  }
  return OrientedLine(a / n, b / n, c / n);
}

Triangle::Triangle(Point v0, Point v1, Point v2) : v_{v0, v1, v2} {
  if (!finite(v0) || !finite(v1) || !finite(v2)) {
    throw GeometryError(ErrorCode::kDegenerateTriangle, "non-finite vertex");
  }
  const double diag = bounds().diagonal();
  const double twice_area = cross(v1 - v0, v2 - v0);
  if (std::abs(twice_area) <= tol::kGeom * diag * diag || diag == 0.0) {
    throw GeometryError(ErrorCode::kDegenerateTriangle, "degenerate triangle");
  }
  if (twice_area < 0) std::swap(v_[1], v_[2]);
}

double Triangle::area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

ConvexPolygon::ConvexPolygon(const Triangle& t)
    : vertices_(t.vertices().begin(), t.vertices().end()) {}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw GeometryError(ErrorCode::kInvalidPolygon, "polygon needs at least 3 vertices");
  }
  if (!std::all_of(vertices_.begin(), vertices_.end(), finite)) {
    throw GeometryError(ErrorCode::kInvalidPolygon, "non-finite vertex");
  }
  const double diag = bounds().diagonal();
  const double eps_len = tol::kGeom * diag;
  const double eps_area = tol::kGeom * diag * diag;
  if (diag == 0.0) throw GeometryError(ErrorCode::kInvalidPolygon, "all vertices coincide");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(vertices_[i], vertices_[j]) <= eps_len) {
        throw GeometryError(ErrorCode::kInvalidPolygon, "repeated vertex");
      }
    }
  }

  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(vertices_[i], vertices_[(i + 1) % n]);
  if (twice_area < 0) std::reverse(vertices_.begin(), vertices_.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices_[(i + 1) % n] - vertices_[i];
    const Point e1 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(e0, e1) <= eps_area) {
      throw GeometryError(ErrorCode::kInvalidPolygon, "polygon is not strictly convex");
    }
  }
  // Positive turns alone admit self-intersecting stars; every vertex must
  // also lie on the inner side of every edge.
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = vertices_[i];
    const Point e = vertices_[(i + 1) % n] - p;
    for (std::size_t j = 0; j < n; ++j) {
      if (cross(e, vertices_[j] - p) < -eps_area) {
        throw GeometryError(ErrorCode::kInvalidPolygon, "polygon is not convex");
      }
    }
  }
}

double ConvexPolygon::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      d = std::max(d, distance(vertices_[i], vertices_[j]));
    }
  }
  return d;
}

Point ConvexPolygon::centroid() const {
  Point sum;
  for (const Point& p : vertices_) sum = sum + p;
  return (1.0 / static_cast<double>(vertices_.size())) * sum;
}

bool ConvexPolygon::contains(Point p) const {
  const double slack = tol::kGeom * diameter();
  for (const OrientedLine& side : sides_of(*this)) {
    if (side(p) < -slack) return false;
  }
  return true;
}

std::vector<OrientedLine> sides_of(const ConvexPolygon& poly) {
  const auto v = poly.vertices();
  const Point inside = poly.centroid();
  std::vector<OrientedLine> sides;
  sides.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    sides.push_back(make_oriented_line(v[i], v[(i + 1) % v.size()], inside));
  }
  return sides;
}

ClipResult clip_line_to_polygon(const OrientedLine& line, const ConvexPolygon& poly) {
  const double diam = poly.diameter();
  const double slack = tol::kGeom * diam;
  const auto sides = sides_of(poly);

  // Parameterize the line as origin + t * dir and clip t against each
  // inner half-plane.
  const Point dir{-line.b(), line.a()};
  const Point origin = (-line.c()) * line.normal();
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  for (const OrientedLine& side : sides) {
    const double f0 = side(origin);
    const double fd = dot(side.normal(), dir);
    if (std::abs(fd) <= tol::kNormalization) {
      if (f0 < -slack) return ClipEmpty{};
      continue;
    }
    const double t = -f0 / fd;
    if (fd > 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }

  auto at = [&](double t) { return origin + t * dir; };
  if (t0 > t1) {
    const Point mid = at(0.5 * (t0 + t1));
    for (const OrientedLine& side : sides) {
      if (side(mid) < -slack) return ClipEmpty{};
    }
    return ClipPoint{mid};
  }
  if (t1 - t0 <= slack) return ClipPoint{at(0.5 * (t0 + t1))};

  Point p = at(t0);
  Point q = at(t1);
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  return ClipSegment{p, q};
}

TriangleClass classify_triangle(const Triangle& t) {
  std::array<double, 3> len{};
  for (int i = 0; i < 3; ++i) len[i] = distance(t[(i + 1) % 3], t[(i + 2) % 3]);
  auto same = [&](int i, int j) {
    return std::abs(len[i] - len[j]) <= tol::kGeom * std::max(len[i], len[j]);
  };
  const bool s01 = same(0, 1);
  const bool s12 = same(1, 2);
  const bool s02 = same(0, 2);

  TriangleClass out{TriangleShape::kScalene, false};
  if (s01 && s12 && s02) {
    out.shape = TriangleShape::kEquilateral;
  } else if (s01 || s12 || s02) {
    out.shape = TriangleShape::kIsosceles;
  }
  for (int i = 0; i < 3; ++i) {
    const Point e1 = t[(i + 1) % 3] - t[i];
    const Point e2 = t[(i + 2) % 3] - t[i];
    if (std::abs(dot(e1, e2)) <= tol::kGeom * norm(e1) * norm(e2)) out.right_angled = true;
  }
  return out;
}

std::array<double, 3> altitudes(const Triangle& t) {
  const double twice_area = 2.0 * t.area();
  std::array<double, 3> h{};
  for (int i = 0; i < 3; ++i) h[i] = twice_area / distance(t[(i + 1) % 3], t[(i + 2) % 3]);
  return h;
}

Point RigidMotion::apply(Point p) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y + shift.x, s * p.x + c * p.y + shift.y};
}

OrientedLine RigidMotion::apply(const OrientedLine& line) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Point n{c * line.a() - s * line.b(), s * line.a() + c * line.b()};
  return line_from_coefficients(n.x, n.y, line.c() - dot(n, shift));
}

}  // namespace vloci
