#include "cli/scene.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace vloci::cli {

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kTriangle: return "triangle";
    case ShapeKind::kPolygon: return "polygon";
    case ShapeKind::kLines: return "lines";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_number(std::string_view text) {
  const std::string s(trim(text));
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Point parse_point(std::string_view token) {
  const auto xy = split(token, ',');
  if (xy.size() != 2) throw SceneError("expected a point 'x,y', got '" + std::string(token) + "'");
  const auto x = to_number(xy[0]);
  const auto y = to_number(xy[1]);
  if (!x || !y) throw SceneError("invalid coordinate in '" + std::string(token) + "'");
  return {*x, *y};
}

Point json_point(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SceneError("scene point must be [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Point> json_points(const nlohmann::json& j) {
  if (!j.is_array()) throw SceneError("expected an array of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(json_point(p));
  return out;
}

}  // namespace

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_point(token));
  return out;
}

std::vector<std::pair<Point, Point>> parse_line_specs(std::string_view text) {
  std::vector<std::pair<Point, Point>> out;
  for (std::string_view part : split(text, ';')) {
    if (trim(part).empty()) continue;
    const auto pts = parse_points(part);
    if (pts.size() != 2) throw SceneError("each line needs exactly two points");
    out.emplace_back(pts[0], pts[1]);
  }
  if (out.empty()) throw SceneError("no lines given");
  return out;
}

std::vector<double> parse_k_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split(text, ',')) {
    const auto v = to_number(part);
    if (!v) throw KListError("malformed k-list entry '" + std::string(trim(part)) + "'");
    out.push_back(*v);
  }
  return out;
}

Scene parse_scene_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SceneError(std::string("scene file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SceneError("scene must be a JSON object");

  Scene scene;
  const int shapes = static_cast<int>(doc.contains("triangle")) +
                     static_cast<int>(doc.contains("polygon")) +
                     static_cast<int>(doc.contains("lines"));
  if (shapes > 1) throw SceneError("scene must give only one of triangle, polygon, lines");
  if (doc.contains("triangle")) {
    scene.kind = ShapeKind::kTriangle;
    scene.points = json_points(doc["triangle"]);
  } else if (doc.contains("polygon")) {
    scene.kind = ShapeKind::kPolygon;
    scene.points = json_points(doc["polygon"]);
  } else if (doc.contains("lines")) {
    scene.kind = ShapeKind::kLines;
    if (!doc["lines"].is_array()) throw SceneError("lines must be an array");
    for (const auto& l : doc["lines"]) {
      const auto pts = json_points(l);
      if (pts.size() != 2) throw SceneError("each line needs exactly two points");
      scene.line_specs.emplace_back(pts[0], pts[1]);
    }
  } else if (!doc.contains("alpha")) {
    throw SceneError("scene needs a triangle, polygon, lines or ellipse axes");
  }
  if (doc.contains("k")) {
    const auto& k = doc["k"];
    if (!k.is_array()) throw KListError("k must be an array of numbers");
    for (const auto& v : k) {
      if (!v.is_number()) throw KListError("k must be an array of numbers");
      scene.k.push_back(v.get<double>());
    }
  }
  for (const char* key : {"alpha", "beta"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_number()) throw SceneError(std::string(key) + " must be a number");
    (key[0] == 'a' ? scene.alpha : scene.beta) = doc[key].get<double>();
  }
  return scene;
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene_json(buf.str());
}

ConvexPolygon Scene::polygon() const {
  switch (kind) {
    case ShapeKind::kTriangle:
      if (points.size() != 3) throw SceneError("a triangle needs exactly three vertices");
      return ConvexPolygon(Triangle(points[0], points[1], points[2]));
    case ShapeKind::kPolygon:
      return ConvexPolygon(points);
    case ShapeKind::kLines:
      break;
  }
  throw SceneError("this analysis needs a triangle or convex polygon");
}

std::vector<OrientedLine> Scene::lines() const {
  if (kind != ShapeKind::kLines) return sides_of(polygon());
  std::vector<OrientedLine> out;
  for (const auto& [p, q] : line_specs) out.push_back(line_through(p, q));
  if (out.empty()) throw SceneError("no lines given");
  return out;
}

std::vector<Point> Scene::defining_points() const {
  if (kind != ShapeKind::kLines) return points;
  std::vector<Point> out;
  for (const auto& [p, q] : line_specs) {
    out.push_back(p);
    out.push_back(q);
  }
  return out;
}

}  // namespace vloci::cli
