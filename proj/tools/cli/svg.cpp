#include "cli/svg.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <variant>

namespace vloci::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

SvgFigure::SvgFigure(Bounds viewport, double pixel_width)
    : view_(viewport),
      scale_(pixel_width / viewport.width()),
      width_px_(pixel_width),
      height_px_(viewport.height() * pixel_width / viewport.width()) {}

std::string_view SvgFigure::dash_pattern(std::size_t i) {
  static constexpr std::array<std::string_view, 6> kPatterns = {
      "", "8,4", "2,3", "10,3,2,3", "14,6", "4,2,1,2"};
  return kPatterns[i % kPatterns.size()];
}

Point SvgFigure::to_pixels(Point p) const {
  return {(p.x - view_.min.x) * scale_, (view_.max.y - p.y) * scale_};
}

void SvgFigure::open_path(std::string_view tag, std::string_view stroke, std::string_view dash) {
  body_ << "  <" << tag << " fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"";
  if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
}

void SvgFigure::polygon(std::span<const Point> points, std::string_view stroke,
                        std::string_view dash) {
  open_path("polygon", stroke, dash);
  body_ << " points=\"";
  for (const Point& p : points) {
    const Point q = to_pixels(p);
    body_ << fmt(q.x) << ',' << fmt(q.y) << ' ';
  }
  body_ << "\"/>\n";
}

void SvgFigure::polyline(std::span<const Point> points, std::string_view stroke,
                         std::string_view dash) {
  open_path("polyline", stroke, dash);
  body_ << " points=\"";
  for (const Point& p : points) {
    const Point q = to_pixels(p);
    body_ << fmt(q.x) << ',' << fmt(q.y) << ' ';
  }
  body_ << "\"/>\n";
}

void SvgFigure::segment(Point p, Point q, std::string_view stroke, std::string_view dash) {
  const Point a = to_pixels(p);
  const Point b = to_pixels(q);
  open_path("line", stroke, dash);
  body_ << " x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(b.y) << "\"/>\n";
}

void SvgFigure::dot(Point p, std::string_view fill) {
  const Point a = to_pixels(p);
  body_ << "  <circle cx=\"" << fmt(a.x) << "\" cy=\"" << fmt(a.y) << "\" r=\"3\" fill=\"" << fill
        << "\"/>\n";
}

void SvgFigure::line(const OrientedLine& l, std::string_view stroke, std::string_view dash) {
  const ConvexPolygon frame(std::vector<Point>{
      view_.min, {view_.max.x, view_.min.y}, view_.max, {view_.min.x, view_.max.y}});
  const ClipResult clip = clip_line_to_polygon(l, frame);
  if (const auto* s = std::get_if<ClipSegment>(&clip)) segment(s->first, s->second, stroke, dash);
}

std::string SvgFigure::str() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width_px_)
      << "\" height=\"" << fmt(height_px_) << "\" viewBox=\"0 0 " << fmt(width_px_) << ' '
      << fmt(height_px_) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body_.str() << "</svg>\n";
  return out.str();
}

void SvgFigure::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write figure to '" + path + "'");
  out << str();
}

}  // namespace vloci::cli
