#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <variant>

#include "cli/svg.hpp"
#include "vloci/inverse.hpp"
#include "vloci/linear_locus.hpp"
#include "vloci/oracle.hpp"

namespace vloci::cli {

double round_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

constexpr int kVerifyResolution = 400;
constexpr int kEllipseSamples = 256;

Json num(double v) { return round_sig(v); }

Json point_json(Point p) { return Json::array({num(p.x), num(p.y)}); }

Json line_json(const OrientedLine& l) {
  return Json{{"a", num(l.a())}, {"b", num(l.b())}, {"c", num(l.c())}};
}

Json input_json(std::string_view command, const Scene& scene, std::span<const double> ks) {
  Json in{{"command", command}, {"shape", to_string(scene.kind)}};
  if (scene.kind == ShapeKind::kLines) {
    Json lines = Json::array();
    for (const auto& [p, q] : scene.line_specs) {
      lines.push_back(Json::array({point_json(p), point_json(q)}));
    }
    in["lines"] = std::move(lines);
  } else {
    Json verts = Json::array();
    for (const Point& p : scene.points) verts.push_back(point_json(p));
    in["vertices"] = std::move(verts);
  }
  if (!ks.empty()) {
    Json k = Json::array();
    for (double v : ks) k.push_back(num(v));
    in["k"] = std::move(k);
  }
  return in;
}

Json make_report(Json input, Json analysis, Json results, Json verification) {
  Json doc;
  doc["input"] = std::move(input);
  doc["analysis"] = std::move(analysis);
  doc["results"] = std::move(results);
  doc["verification"] = std::move(verification);
  return doc;
}

// Bounding box padded so thin scenes still get a usable frame, plus the
// 20% margin.
Bounds figure_viewport(std::span<const Point> points) {
  Bounds b = bounds_of(points);
  double span = std::max(b.width(), b.height());
  if (!(span > 0)) span = 1.0;
  const double min_side = 0.25 * span;
  if (b.width() < min_side) {
    const double pad = 0.5 * (min_side - b.width());
    b.min.x -= pad;
    b.max.x += pad;
  }
  if (b.height() < min_side) {
    const double pad = 0.5 * (min_side - b.height());
    b.min.y -= pad;
    b.max.y += pad;
  }
  return b.expanded(0.2);
}

std::vector<Point> ellipse_outline(const EllipseGeometry& e, int samples) {
  std::vector<Point> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) pts.push_back(e.at(2.0 * std::numbers::pi * i / samples));
  return pts;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  const double t = len2 > 0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + t * d);
}

double distance_to_outline(Point p, std::span<const Point> outline) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outline.size(); ++i) {
    best = std::min(best, point_segment_distance(p, outline[i], outline[(i + 1) % outline.size()]));
  }
  return best;
}

std::vector<oracle::LineSpec> oracle_lines(const Scene& scene) {
  if (scene.kind == ShapeKind::kLines) return {scene.line_specs.begin(), scene.line_specs.end()};
  return oracle::edge_specs(scene.points);
}

Json minimizer_json(const Minimizer& m) {
  if (const auto* p = std::get_if<UniquePoint>(&m)) {
    return Json{{"kind", "point"}, {"at", point_json(p->at)}};
  }
  return Json{{"kind", "line"}, {"line", line_json(std::get<LineOfMinima>(m).line)}};
}

Point minimizer_anchor(const Minimizer& m) {
  if (const auto* p = std::get_if<UniquePoint>(&m)) return p->at;
  const OrientedLine& l = std::get<LineOfMinima>(m).line;
  return (-l.c()) * l.normal();
}

Json grid_min_check(const Scene& scene, const SquaredMinimum& min) {
  std::vector<Point> pts = scene.defining_points();
  pts.push_back(minimizer_anchor(min.argmin));
  const Bounds box = figure_viewport(pts).expanded(0.25);
  const auto specs = oracle_lines(scene);
  const auto found = oracle::grid_min(
      [&](Point p) { return oracle::squared_distance_sum(specs, p); },
      oracle::GridSpec(box, kVerifyResolution));
  const double delta = std::abs(found.value - min.k_min);
  return Json{{"grid_k_min", num(found.value)},
              {"grid_argmin", point_json(found.at)},
              {"delta_k", num(delta)},
              {"relative_delta", num(delta / std::max(1.0, min.k_min))}};
}

}  // namespace

std::optional<std::array<long long, 6>> integer_coefficients(const QuadraticForm& q, double k,
                                                             int max_denominator) {
  const std::array<double, 6> c{q.A, q.B, q.C, q.D, q.E, q.F0 - k};
  double largest = 0.0;
  for (double v : c) largest = std::max(largest, std::abs(v));
  if (!(largest > 0) || !std::isfinite(largest)) return std::nullopt;

  for (int s = 1; s <= max_denominator; ++s) {
    std::array<long long, 6> out{};
    bool integral = true;
    for (std::size_t i = 0; i < c.size() && integral; ++i) {
      const double scaled = s * c[i];
      const double rounded = std::round(scaled);
      integral = std::abs(scaled - rounded) <= 1e-9 * std::max(1.0, s * largest) &&
                 std::abs(rounded) < 1e15;
      out[i] = static_cast<long long>(rounded);
    }
    if (!integral) continue;
    long long g = 0;
    for (long long v : out) g = std::gcd(g, v);
    if (g == 0) return std::nullopt;
    for (long long& v : out) v /= g;
    return out;
  }
  return std::nullopt;
}

std::string equation_string(const std::array<long long, 6>& coef) {
  static constexpr std::array<const char*, 6> kNames = {"x^2", "xy", "y^2", "x", "y", ""};
  std::string out;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    const long long v = coef[i];
    if (v == 0) continue;
    if (v < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const long long mag = v < 0 ? -v : v;
    if (mag != 1 || kNames[i][0] == '\0') out += std::to_string(mag);
    out += kNames[i];
  }
  if (out.empty()) out = "0";
  return out + "=0";
}

Json sum_locus_report(const Scene& scene, std::span<const double> ks, const CommandOptions& opts) {
  const ConvexPolygon poly = scene.polygon();
  const LinearForm v = distance_sum_form(poly);
  const KRange range = k_range(poly);

  Json analysis;
  analysis["linear_form"] = Json{{"A", num(v.A)}, {"B", num(v.B)}, {"C", num(v.C)}};
  analysis["k_range"] = Json{{"min", num(range.k_min)}, {"max", num(range.k_max)}};
  const LevelLines dir = level_direction(poly);
  if (const auto* d = std::get_if<LevelDirection>(&dir)) {
    analysis["level_direction"] = point_json(d->unit);
  } else {
    analysis["level_direction"] = "isotropic";
  }
  analysis["viviani"] = is_viviani(poly);

  std::vector<SumLocus> loci;
  Json results = Json::array();
  for (double k : ks) {
    const SumLocus locus = sum_locus(poly, k);
    loci.push_back(locus);
    Json r{{"k", num(k)}};
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, LocusEmpty>) {
            r["locus"] = "empty";
          } else if constexpr (std::is_same_v<T, LocusVertex>) {
            r["locus"] = "vertex";
            r["points"] = Json::array({point_json(l.at)});
          } else if constexpr (std::is_same_v<T, LocusSegment>) {
            r["locus"] = "segment";
            r["points"] = Json::array({point_json(l.first), point_json(l.second)});
          } else {
            r["locus"] = "whole_polygon";
          }
        },
        locus);
    results.push_back(std::move(r));
  }

  Json verification;  // null unless requested
  if (opts.verify) {
    const std::vector<Point> verts(poly.vertices().begin(), poly.vertices().end());
    const oracle::GridSpec grid(poly.bounds(), kVerifyResolution);
    const double cell = std::max(grid.cell_x(), grid.cell_y());
    const oracle::Objective objective = [&](Point p) {
      return oracle::inside_convex(verts, p) ? oracle::distance_sum(verts, p)
                                             : std::numeric_limits<double>::infinity();
    };
    verification = Json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double tol = std::max(norm(v.gradient()) * cell, 1e-9 * std::abs(ks[i]));
      const auto hits = oracle::grid_level_points(objective, ks[i], grid, tol);
      double worst = 0.0;
      for (const Point& p : hits) {
        double d = 0.0;
        if (const auto* s = std::get_if<LocusSegment>(&loci[i])) {
          d = point_segment_distance(p, s->first, s->second);
        } else if (const auto* pt = std::get_if<LocusVertex>(&loci[i])) {
          d = distance(p, pt->at);
        } else if (std::holds_alternative<LocusEmpty>(loci[i])) {
          d = std::numeric_limits<double>::infinity();
        }
        worst = std::max(worst, d);
      }
      verification.push_back(Json{{"k", num(ks[i])},
                                  {"grid_level_points", hits.size()},
                                  {"max_distance_cells", hits.empty() ? Json(0.0)
                                                                      : num(worst / cell)}});
    }
  }

  if (opts.plot) {
    SvgFigure fig(figure_viewport(poly.vertices()));
    fig.polygon(poly.vertices(), "black");
    for (std::size_t i = 0; i < loci.size(); ++i) {
      const auto dash = SvgFigure::dash_pattern(i);
      if (const auto* s = std::get_if<LocusSegment>(&loci[i])) {
        fig.segment(s->first, s->second, "steelblue", dash);
      } else if (const auto* p = std::get_if<LocusVertex>(&loci[i])) {
        fig.dot(p->at, "steelblue");
      } else if (std::holds_alternative<LocusWholePolygon>(loci[i])) {
        fig.polygon(poly.vertices(), "steelblue", dash);
      }
    }
    fig.save(*opts.plot);
  }

  return make_report(input_json("sum-locus", scene, ks), std::move(analysis), std::move(results),
                     std::move(verification));
}

Json squared_locus_report(const Scene& scene, std::span<const double> ks,
                          const CommandOptions& opts) {
  const std::vector<OrientedLine> lines = scene.lines();
  const QuadraticForm q = squared_sum_form(lines);
  const SquaredMinimum min = min_squared_sum(lines);

  Json analysis;
  analysis["quadratic_form"] = Json{{"A", num(q.A)}, {"B", num(q.B)}, {"C", num(q.C)},
                                    {"D", num(q.D)}, {"E", num(q.E)}, {"F0", num(q.F0)}};
  analysis["discriminant"] = num(discriminant(q));
  analysis["k_min"] = num(min.k_min);
  analysis["minimizer"] = minimizer_json(min.argmin);
  if (scene.kind == ShapeKind::kTriangle) {
    const auto poly = scene.polygon();
    const auto v = poly.vertices();
    analysis["circle"] = is_circle_locus(Triangle(v[0], v[1], v[2]));
  }

  std::vector<SquaredLocus> loci;
  Json results = Json::array();
  for (double k : ks) {
    const SquaredLocus locus = classify_squared_locus(lines, k);
    loci.push_back(locus);
    Json r{{"k", num(k)}};
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, LocusNone>) {
            r["locus"] = "empty";
          } else if constexpr (std::is_same_v<T, LocusPoint>) {
            r["locus"] = "point";
            r["at"] = point_json(l.at);
          } else if constexpr (std::is_same_v<T, LocusEllipse>) {
            r["locus"] = "ellipse";
            r["center"] = point_json(l.geometry.center);
            r["semi_major"] = num(l.geometry.semi_major);
            r["semi_minor"] = num(l.geometry.semi_minor);
            r["rotation"] = num(l.geometry.rotation);
          } else {
            r["locus"] = "non_elliptic";
            r["kind"] = l.kind == NonEllipticKind::kParallelPencil ? "parallel_pencil" : "other";
            Json ls = Json::array();
            for (const auto& line : l.lines) ls.push_back(line_json(line));
            r["lines"] = std::move(ls);
          }
        },
        locus);
    const auto coef = integer_coefficients(q, k);
    r["equation"] = coef ? Json(equation_string(*coef)) : Json(nullptr);
    results.push_back(std::move(r));
  }

  Json verification;
  if (opts.verify) {
    verification["minimum"] = grid_min_check(scene, min);
    const auto specs = oracle_lines(scene);
    const oracle::Objective objective = [&](Point p) {
      return oracle::squared_distance_sum(specs, p);
    };
    Json levels = Json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto* e = std::get_if<LocusEllipse>(&loci[i]);
      if (e == nullptr) continue;
      const auto outline = ellipse_outline(e->geometry, 4096);
      const oracle::GridSpec grid(figure_viewport(outline).expanded(-0.1), kVerifyResolution);
      const double cell = std::max(grid.cell_x(), grid.cell_y());
      const double excess = ks[i] - min.k_min;
      const double tol = 2.0 * excess / e->geometry.semi_major * cell;
      const auto hits = oracle::grid_level_points(objective, ks[i], grid, tol);
      double worst = 0.0;
      for (const Point& p : hits) worst = std::max(worst, distance_to_outline(p, outline));
      levels.push_back(Json{{"k", num(ks[i])},
                            {"grid_level_points", hits.size()},
                            {"max_distance_cells", num(worst / cell)}});
    }
    verification["levels"] = std::move(levels);
  }

  if (opts.plot) {
    SvgFigure fig(figure_viewport(scene.defining_points()));
    if (scene.kind == ShapeKind::kLines) {
      for (const auto& l : lines) fig.line(l, "black");
    } else {
      const auto poly = scene.polygon();
      fig.polygon(poly.vertices(), "black");
    }
    for (std::size_t i = 0; i < loci.size(); ++i) {
      const auto dash = SvgFigure::dash_pattern(i);
      if (const auto* e = std::get_if<LocusEllipse>(&loci[i])) {
        fig.polygon(ellipse_outline(e->geometry, kEllipseSamples), "firebrick", dash);
      } else if (const auto* p = std::get_if<LocusPoint>(&loci[i])) {
        fig.dot(p->at, "firebrick");
      } else if (const auto* n = std::get_if<LocusNonElliptic>(&loci[i])) {
        for (const auto& l : n->lines) fig.line(l, "firebrick", dash);
      }
    }
    fig.save(*opts.plot);
  }

  return make_report(input_json("squared-locus", scene, ks), std::move(analysis),
                     std::move(results), std::move(verification));
}

Json min_squares_report(const Scene& scene, const CommandOptions& opts) {
  const std::vector<OrientedLine> lines = scene.lines();
  const SquaredMinimum min = min_squared_sum(lines);

  Json analysis{{"line_count", lines.size()}};
  Json results{{"k_min", num(min.k_min)}, {"minimizer", minimizer_json(min.argmin)}};
  Json verification;
  if (opts.verify) verification = grid_min_check(scene, min);
  return make_report(input_json("min-squares", scene, {}), std::move(analysis),
                     std::move(results), std::move(verification));
}

Json triangle_from_ellipse_report(double alpha, double beta, const CommandOptions& opts) {
  const InverseResult inv = triangle_from_ellipse(alpha, beta);
  const auto sides = sides_of(ConvexPolygon(inv.triangle));
  const EllipseGeometry back = ellipse_geometry(sides, inv.k);
  const double residual =
      std::max(std::abs(back.semi_major - alpha), std::abs(back.semi_minor - beta));

  Json input{{"command", "triangle-from-ellipse"}, {"alpha", num(alpha)}, {"beta", num(beta)}};
  Json analysis{
      {"params", Json{{"a", num(inv.params.a)}, {"b", num(inv.params.b)}, {"l", num(inv.params.l)}}}};
  Json verts = Json::array();
  for (const Point& p : inv.triangle.vertices()) verts.push_back(point_json(p));
  Json results{{"vertices", std::move(verts)},
               {"k", num(inv.k)},
               {"roundtrip", Json{{"center", point_json(back.center)},
                                  {"semi_major", num(back.semi_major)},
                                  {"semi_minor", num(back.semi_minor)},
                                  {"rotation", num(back.rotation)},
                                  {"residual", num(residual)}}}};

  Json verification;
  if (opts.verify) {
    // Sample the canonical ellipse directly and evaluate the distance sum
    // with the point-to-line formula.
    const auto& v = inv.triangle.vertices();
    const auto specs = oracle::edge_specs(v);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double t = 2.0 * std::numbers::pi * i / 64;
      const Point p{alpha * std::cos(t), beta * std::sin(t)};
      worst = std::max(worst, std::abs(oracle::squared_distance_sum(specs, p) - inv.k));
    }
    verification = Json{
        {"canonical_rhs", num(canonical_rhs(inv.params.a, inv.params.b, inv.k))},
        {"max_relative_level_error", num(worst / inv.k)}};
  }

  if (opts.plot) {
    const auto& v = inv.triangle.vertices();
    std::vector<Point> frame(v.begin(), v.end());
    frame.push_back({-alpha, -beta});
    frame.push_back({alpha, beta});
    SvgFigure fig(figure_viewport(frame));
    fig.polygon(v, "black");
    fig.polygon(ellipse_outline(back, kEllipseSamples), "firebrick");
    fig.dot(back.center, "firebrick");
    fig.save(*opts.plot);
  }

  return make_report(std::move(input), std::move(analysis), std::move(results),
                     std::move(verification));
}

}  // namespace vloci::cli
