#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vloci/geometry.hpp"

namespace vloci::cli {

/// Invalid scene or analysis parameter (exit status 2).
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed k-list (exit status 3).
class KListError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ShapeKind { kTriangle, kPolygon, kLines };

std::string_view to_string(ShapeKind kind);

struct Scene {
  ShapeKind kind = ShapeKind::kTriangle;
  std::vector<Point> points;                     // triangle or polygon vertices
  std::vector<std::pair<Point, Point>> line_specs;  // two points per line
  std::vector<double> k;
  std::optional<double> alpha;
  std::optional<double> beta;

  /// Validated polygon; throws SceneError for a line scene.
  ConvexPolygon polygon() const;
  /// Side lines for polygons, lines through the two points otherwise.
  std::vector<OrientedLine> lines() const;
  /// All points defining the scene.
  std::vector<Point> defining_points() const;
};

/// "x,y x,y x,y" (whitespace separated pairs).
std::vector<Point> parse_points(std::string_view text);

/// "x,y x,y; x,y x,y" (semicolon separated two-point lines).
std::vector<std::pair<Point, Point>> parse_line_specs(std::string_view text);

/// "2.8,3.2,3.6". Throws KListError.
std::vector<double> parse_k_list(std::string_view text);

/// JSON document with one of "triangle", "polygon", "lines" and optional
/// "k", "alpha", "beta".
Scene load_scene_file(const std::string& path);
Scene parse_scene_json(std::string_view text);

}  // namespace vloci::cli
