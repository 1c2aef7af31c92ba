#pragma once

#include <array>
#include <cmath>
#include <span>
#include <variant>
#include <vector>

namespace vloci {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point, Point) = default;
};

inline constexpr double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline constexpr double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point p, Point q) { return norm(p - q); }

/// Axis-aligned bounding box.
struct Bounds {
  Point min;
  Point max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return std::hypot(width(), height()); }
  Bounds expanded(double fraction) const;
};

Bounds bounds_of(std::span<const Point> points);

/// Normalized line a*x + b*y + c = 0 with a^2 + b^2 = 1. The sign of
/// (a, b, c) picks the positive side; evaluation gives the signed distance.
class OrientedLine {
 public:
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Point normal() const { return {a_, b_}; }

  double operator()(Point p) const { return a_ * p.x + b_ * p.y + c_; }

  /// Same zero set, opposite positive side.
  OrientedLine flipped() const { return OrientedLine(-a_, -b_, -c_); }

  friend OrientedLine make_oriented_line(Point p, Point q, Point positive_side_hint);
  friend OrientedLine line_through(Point p, Point q);
  friend OrientedLine line_from_coefficients(double a, double b, double c);

 private:
  OrientedLine(double a, double b, double c) : a_(a), b_(b), c_(c) {}

  double a_;
  double b_;
  double c_;
};

/// Line through p and q whose positive side contains the hint.
/// Throws DegenerateLine when p ~ q and AmbiguousOrientation when the hint
/// lies on the line.
OrientedLine make_oriented_line(Point p, Point q, Point positive_side_hint);

/// Line through p and q, positive side to the left of p -> q.
OrientedLine line_through(Point p, Point q);

/// Normalizes a*x + b*y + c = 0 without changing the sign convention.
OrientedLine line_from_coefficients(double a, double b, double c);

inline double signed_eval(const OrientedLine& line, Point p) { return line(p); }

class Triangle {
 public:
  /// Reorders to counterclockwise; throws DegenerateTriangle when the
  /// doubled signed area is below 1e-9 * diagonal^2.
  Triangle(Point v0, Point v1, Point v2);

  const std::array<Point, 3>& vertices() const { return v_; }
  Point operator[](std::size_t i) const { return v_[i]; }
  double area() const;
  Bounds bounds() const { return bounds_of(v_); }

 private:
  std::array<Point, 3> v_;
};

class ConvexPolygon {
 public:
  /// Accepts either winding (stores counterclockwise). Rejects fewer than
  /// three vertices, repeated vertices, collinear runs and non-convex input.
  explicit ConvexPolygon(std::vector<Point> vertices);
  ConvexPolygon(const Triangle& t);  // NOLINT(google-explicit-constructor)

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Bounds bounds() const { return bounds_of(vertices_); }
  double diameter() const;
  /// Vertex average; strictly interior for a convex polygon.
  Point centroid() const;
  /// Every side evaluates >= -slack at p, slack = 1e-9 * diameter.
  bool contains(Point p) const;

 private:
  std::vector<Point> vertices_;
};

/// One line per edge (v_i, v_{i+1}), positive toward the centroid.
std::vector<OrientedLine> sides_of(const ConvexPolygon& poly);

struct ClipEmpty {
  friend bool operator==(ClipEmpty, ClipEmpty) = default;
};
struct ClipPoint {
  Point at;
};
struct ClipSegment {
  Point first;   // lexicographically smaller endpoint
  Point second;
};
using ClipResult = std::variant<ClipEmpty, ClipPoint, ClipSegment>;

/// Intersection of the zero set of `line` with the closed polygon.
ClipResult clip_line_to_polygon(const OrientedLine& line, const ConvexPolygon& poly);

enum class TriangleShape { kEquilateral, kIsosceles, kScalene };

struct TriangleClass {
  TriangleShape shape;
  bool right_angled;
};

TriangleClass classify_triangle(const Triangle& t);

/// Altitude i is dropped from vertex i onto the opposite side.
std::array<double, 3> altitudes(const Triangle& t);

/// Rotation about the origin followed by a translation.
struct RigidMotion {
  double angle = 0.0;
  Point shift;

  Point apply(Point p) const;
  OrientedLine apply(const OrientedLine& line) const;
};

}  // namespace vloci
