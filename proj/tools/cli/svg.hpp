#pragma once

#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include "vloci/geometry.hpp"

namespace vloci::cli {

/// Minimal standalone SVG writer in world coordinates (y up).
class SvgFigure {
 public:
  SvgFigure(Bounds viewport, double pixel_width = 640.0);

  void polygon(std::span<const Point> points, std::string_view stroke, std::string_view dash = {});
  void polyline(std::span<const Point> points, std::string_view stroke, std::string_view dash = {});
  void segment(Point p, Point q, std::string_view stroke, std::string_view dash = {});
  void dot(Point p, std::string_view fill);
  /// Draws the part of the line inside the viewport.
  void line(const OrientedLine& l, std::string_view stroke, std::string_view dash = {});

  std::string str() const;
  /// Throws std::runtime_error when the file cannot be written.
  void save(const std::string& path) const;

  /// Dash pattern for the i-th locus; cycles through a fixed list.
  static std::string_view dash_pattern(std::size_t i);

 private:
  Point to_pixels(Point p) const;
  void open_path(std::string_view tag, std::string_view stroke, std::string_view dash);

  Bounds view_;
  double scale_;
  double width_px_;
  double height_px_;
  std::ostringstream body_;
};

}  // namespace vloci::cli
