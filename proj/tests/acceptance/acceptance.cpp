// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "support/shapes.hpp"
#include "vloci/vloci.hpp"

namespace vloci {
namespace {

using testing::Rng;

const double kSqrt3 = std::sqrt(3.0);

struct Verdict {
  bool pass = true;
  std::string detail;

  // Records the first failing check.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(const char* f, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel_gap(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

double angle_gap(double r1, double r2) {
  const double d = std::fmod(std::abs(r1 - r2), std::numbers::pi);
  return std::min(d, std::numbers::pi - d);
}

std::vector<OrientedLine> sides(const Triangle& t) { return sides_of(ConvexPolygon(t)); }

const Triangle kRight345({0, 0}, {0, 3}, {4, 0});

Verdict right_triangle_linear_form() {
  Verdict v;
  const LinearForm f = distance_sum_form(kRight345);
  v.require(std::abs(f.A - 0.4) <= 1e-12, fmt("A = %.17g", f.A));
  v.require(std::abs(f.B - 0.2) <= 1e-12, fmt("B = %.17g", f.B));
  v.require(std::abs(f.C - 2.4) <= 1e-12, fmt("C = %.17g", f.C));
  if (v.pass) v.detail = fmt("V = %.12gx + %.12gy + ...", f.A, f.B);
  return v;
}

Verdict right_triangle_k_range() {
  Verdict v;
  const KRange r = k_range(kRight345);
  v.require(std::abs(r.k_min - 2.4) <= 1e-12 && std::abs(r.k_max - 4.0) <= 1e-12,
            fmt("range (%.17g, %.17g)", r.k_min, r.k_max));
  const SumLocus lo = sum_locus(kRight345, 2.4);
  const SumLocus hi = sum_locus(kRight345, 4.0);
  const auto* a = std::get_if<LocusVertex>(&lo);
  const auto* c = std::get_if<LocusVertex>(&hi);
  v.require(a != nullptr && distance(a->at, {0, 0}) <= 1e-9, "k=2.4 is not the vertex (0,0)");
  v.require(c != nullptr && distance(c->at, {4, 0}) <= 1e-9, "k=4 is not the vertex (4,0)");
  if (v.pass) v.detail = fmt("range (%.12g, %.12g), endpoints collapse to A and C", r.k_min, r.k_max);
  return v;
}

Verdict right_triangle_level_direction() {
  Verdict v;
  const LevelLines l = level_direction(kRight345);
  const auto* d = std::get_if<LevelDirection>(&l);
  v.require(d != nullptr, "no level direction");
  if (!v.pass) return v;
  const double off = std::abs(dot(d->unit, {2 / std::sqrt(5.0), 1 / std::sqrt(5.0)}));
  v.require(off <= 1e-9, fmt("|dir . (2,1)/sqrt5| = %.3g", off));
  if (v.pass) v.detail = fmt("|dir . (2,1)/sqrt5| = %.3g", off);
  return v;
}

Verdict right_triangle_quadratic() {
  Verdict v;
  const QuadraticForm q = squared_sum_form(sides(kRight345));
  const double got[] = {q.A, q.B, q.C, q.D, q.E, q.F0 - 5.0};
  const double want[] = {34, 24, 41, -72, -96, 19};
  // Best positive scale in the least-squares sense, then compare.
  double num = 0;
  double den = 0;
  for (int i = 0; i < 6; ++i) {
    num += got[i] * want[i];
    den += want[i] * want[i];
  }
  const double scale = num / den;
  v.require(scale > 0, "negative scale");
  double worst = 0;
  // Deviation measured on the coefficients divided by 25.
  for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(got[i] / scale - want[i]) / 25.0);
  v.require(worst <= 1e-9, fmt("max coefficient deviation %.3g", worst));
  v.require(std::abs(scale - 1.0 / 25.0) <= 1e-12, fmt("scale %.17g, expected 1/25", scale));
  if (v.pass) v.detail = fmt("scale 1/%.12g, max deviation %.3g", 1 / scale, worst);
  return v;
}

Verdict ellipse_two_root_two() {
  Verdict v;
  const InverseResult r = triangle_from_ellipse(2, std::sqrt(2.0));
  const Point want[] = {{0, 0.5}, {-1, -0.5}, {1, -0.5}};
  for (int i = 0; i < 3; ++i) {
    v.require(std::abs(r.triangle[i].x - want[i].x) <= 1e-12 &&
                  std::abs(r.triangle[i].y - want[i].y) <= 1e-12,
              fmt("vertex %g off by %.3g", i, distance(r.triangle[i], want[i])));
  }
  v.require(std::abs(r.k - 4.5) <= 1e-12, fmt("k = %.17g", r.k));
  const EllipseGeometry e = ellipse_geometry(sides(r.triangle), r.k);
  v.require(std::abs(e.semi_major - 2) <= 1e-9 && std::abs(e.semi_minor - std::sqrt(2.0)) <= 1e-9,
            fmt("recovered axes (%.17g, %.17g)", e.semi_major, e.semi_minor));
  if (v.pass) v.detail = fmt("k = %.12g, recovered alpha = %.12g", r.k, e.semi_major);
  return v;
}

Verdict circle_root_six() {
  Verdict v;
  const InverseResult r = triangle_from_ellipse(std::sqrt(6.0), std::sqrt(6.0));
  v.require(classify_triangle(r.triangle).shape == TriangleShape::kEquilateral, "not equilateral");
  v.require(std::abs(r.k - 10) <= 1e-12, fmt("k = %.17g", r.k));
  const EllipseGeometry e = ellipse_geometry(sides(r.triangle), r.k);
  v.require(std::abs(e.semi_major - std::sqrt(6.0)) <= 1e-9 &&
                std::abs(e.semi_minor - std::sqrt(6.0)) <= 1e-9,
            fmt("recovered radii (%.17g, %.17g)", e.semi_major, e.semi_minor));
  if (v.pass) v.detail = fmt("k = %.12g, radius = %.12g", r.k, e.semi_major);
  return v;
}

Verdict minimal_sum_isosceles() {
  Verdict v;
  Rng rng(7001);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(0.1, 10);
    const double b = rng.uniform(0.1, 10);
    const SquaredMinimum m = min_squared_sum(sides(testing::isosceles(a, b)));
    const double s = a * a + 3 * b * b;
    const double k = 2 * a * a * b * b / s;
    const double y = 2 * a * b * b / s;
    const auto* at = std::get_if<UniquePoint>(&m.argmin);
    v.require(at != nullptr, "minimizer is not a point");
    if (at == nullptr) break;
    const double err = std::max({rel_gap(m.k_min, k), std::abs(at->at.x) / y, rel_gap(at->at.y, y)});
    worst = std::max(worst, err);
    v.require(err <= 1e-9, fmt("a=%.6g b=%.6g mismatch", a, b));
  }
  const SquaredMinimum eq = min_squared_sum(sides(testing::isosceles(kSqrt3, 1)));
  const Point at = std::get<UniquePoint>(eq.argmin).at;
  v.require(std::abs(eq.k_min - 1) <= 1e-12, fmt("equilateral k_min = %.17g", eq.k_min));
  v.require(std::abs(at.x) <= 1e-12 && std::abs(at.y - kSqrt3 / 3) <= 1e-12,
            fmt("equilateral argmin (%.17g, %.17g)", at.x, at.y));
  if (v.pass) v.detail = fmt("worst relative error %.3g; equilateral k_min = %.15g", worst, eq.k_min);
  return v;
}

Verdict ellipse_theorem() {
  Verdict v;
  Rng rng(7002);
  double largest = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 500; ++trial) {
    const double d = discriminant(squared_sum_form(sides(testing::random_triangle(rng))));
    largest = std::max(largest, d);
    v.require(d < 0, fmt("discriminant %.3g is not negative", d));
  }
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(0.1, 10), b = rng.uniform(0.1, 10), c = rng.uniform(0.1, 10);
    const double p = a * a + c * c;
    const double q = a * a + b * b;
    const double closed = -4 * (a * a / (p * q)) * (b * b + 2 * b * c + c * c + p + q);
    const double got = discriminant(squared_sum_form(sides(Triangle({0, a}, {-b, 0}, {c, 0}))));
    worst = std::max(worst, rel_gap(got, closed));
  }
  v.require(worst <= 1e-9, fmt("closed form relative gap %.3g", worst));
  if (v.pass) v.detail = fmt("max discriminant %.3g; closed-form gap %.3g", largest, worst);
  return v;
}

Verdict circle_criterion() {
  Verdict v;
  Rng rng(7003);
  int disagreements = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Triangle t = testing::random_triangle(rng);
    if (is_circle_locus(t) != (classify_triangle(t).shape == TriangleShape::kEquilateral)) ++disagreements;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Triangle t = testing::random_equilateral(rng);
    if (!is_circle_locus(t) || classify_triangle(t).shape != TriangleShape::kEquilateral) ++disagreements;
  }
  v.require(disagreements == 0, fmt("%g disagreements", disagreements));
  if (v.pass) v.detail = "0 disagreements over 600 triangles";
  return v;
}

Verdict homothety() {
  Verdict v;
  Rng rng(7004);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto ls = sides(testing::random_triangle(rng));
    const double k_min = min_squared_sum(ls).k_min;
    const double k1 = k_min + rng.uniform(0.1, 10);
    const double k2 = k1 + rng.uniform(0.1, 10);
    const EllipseGeometry e1 = ellipse_geometry(ls, k1);
    const EllipseGeometry e2 = ellipse_geometry(ls, k2);
    const double ratio = std::sqrt((k2 - k_min) / (k1 - k_min));
    const double err = std::max({distance(e1.center, e2.center) / std::max(1.0, norm(e1.center)),
                                 angle_gap(e1.rotation, e2.rotation),
                                 rel_gap(e2.semi_major / e1.semi_major, ratio),
                                 rel_gap(e2.semi_minor / e1.semi_minor, ratio)});
    worst = std::max(worst, err);
  }
  v.require(worst <= 1e-9, fmt("worst deviation %.3g", worst));
  if (v.pass) v.detail = fmt("worst deviation %.3g", worst);
  return v;
}

Verdict viviani_equivalence() {
  Verdict v;
  Rng rng(7005);
  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Triangle t = testing::random_triangle(rng);
    if (is_viviani(t) != (classify_triangle(t).shape == TriangleShape::kEquilateral)) ++disagreements;
  }
  v.require(disagreements == 0, fmt("%g disagreements", disagreements));
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Triangle t = testing::random_equilateral(rng);
    const ConvexPolygon poly(t);
    const LinearForm f = distance_sum_form(poly);
    const double h = altitudes(t)[0];
    v.require(is_viviani(poly), "equilateral not reported constant");
    for (int i = 0; i < 100; ++i) {
      worst = std::max(worst, rel_gap(f(testing::random_interior_point(rng, poly)), h));
    }
  }
  v.require(worst <= 1e-9, fmt("V differs from altitude by %.3g", worst));
  if (v.pass) v.detail = fmt("0 disagreements; V vs altitude gap %.3g", worst);
  return v;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double t = std::clamp(dot(p - a, d) / dot(d, d), 0.0, 1.0);
  return distance(p, a + t * d);
}

Verdict oracle_equivalence() {
  Verdict v;
  Rng rng(7006);
  double worst_min = 0;
  double worst_v_cells = 0;
  double worst_q_cells = 0;
  constexpr int kRes = 256;
  for (int trial = 0; trial < 20; ++trial) {
    const Triangle t = testing::random_triangle(rng);
    const std::vector<Point> verts(t.vertices().begin(), t.vertices().end());
    const auto specs = oracle::edge_specs(verts);
    const oracle::Objective q_direct = [&](Point p) { return oracle::squared_distance_sum(specs, p); };

    const SquaredMinimum m = min_squared_sum(sides(t));
    const auto found = oracle::grid_min(q_direct, oracle::GridSpec(t.bounds().expanded(0.5), kRes));
    worst_min = std::max(worst_min, std::abs(found.value - m.k_min) / std::max(m.k_min, 1e-12));

    // Distance-sum level set inside the triangle against the analytic chord.
    const ConvexPolygon poly(t);
    const KRange range = k_range(poly);
    const double k = range.k_min + rng.uniform(0.2, 0.8) * (range.k_max - range.k_min);
    const auto seg = std::get<LocusSegment>(sum_locus(poly, k));
    const oracle::GridSpec vgrid(t.bounds(), kRes);
    const double vcell = std::max(vgrid.cell_x(), vgrid.cell_y());
    const double slope = norm(distance_sum_form(poly).gradient());
    // The sampling band meets each boundary edge in a wedge 1/sin(angle) longer than it is wide,
    // so it is narrowed by the shallowest angle between the chord and the edges it ends on.
    const Point chord = (1.0 / distance(seg.first, seg.second)) * (seg.second - seg.first);
    double shallow = 1;
    for (const OrientedLine& side : sides_of(poly)) {
      for (Point end : {seg.first, seg.second}) {
        if (std::abs(side(end)) <= 1e-9 * poly.diameter()) {
          shallow = std::min(shallow, std::abs(dot(chord, side.normal())));
        }
      }
    }
    const auto v_hits = oracle::grid_level_points(
        [&](Point p) {
          return oracle::inside_convex(verts, p) ? oracle::distance_sum(verts, p)
                                                 : std::numeric_limits<double>::infinity();
        },
        k, vgrid, slope * vcell * shallow);
    v.require(!v_hits.empty(), "no grid samples near the distance-sum level set");
    for (Point p : v_hits) {
      worst_v_cells = std::max(worst_v_cells, point_segment_distance(p, seg.first, seg.second) / vcell);
    }

    // Squared-sum level set against the analytic ellipse.
    const double excess = rng.uniform(0.5, 10);
    const EllipseGeometry e = ellipse_geometry(sides(t), m.k_min + excess);
    std::vector<Point> outline;
    for (int i = 0; i < 4096; ++i) outline.push_back(e.at(2 * std::numbers::pi * i / 4096));
    const oracle::GridSpec qgrid(bounds_of(outline).expanded(0.1), kRes);
    const double qcell = std::max(qgrid.cell_x(), qgrid.cell_y());
    const auto q_hits =
        oracle::grid_level_points(q_direct, m.k_min + excess, qgrid, 2 * excess / e.semi_major * qcell);
    v.require(!q_hits.empty(), "no grid samples near the squared-sum level set");
    for (Point p : q_hits) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < outline.size(); ++i) {
        d = std::min(d, point_segment_distance(p, outline[i], outline[(i + 1) % outline.size()]));
      }
      worst_q_cells = std::max(worst_q_cells, d / qcell);
    }
  }
  v.require(worst_min <= 1e-4, fmt("grid minimum off by %.3g relative", worst_min));
  v.require(worst_v_cells <= 3, fmt("distance-sum samples up to %.3g cells from locus", worst_v_cells));
  v.require(worst_q_cells <= 3, fmt("squared-sum samples up to %.3g cells from locus", worst_q_cells));
  if (v.pass) {
    v.detail = fmt("grid_min gap %.3g; level samples within %.3g cells", worst_min,
                   std::max(worst_v_cells, worst_q_cells));
  }
  return v;
}

Verdict non_uniqueness() {
  Verdict v;
  const EllipseGeometry up = ellipse_geometry(sides(Triangle({0, 0.5}, {-1, -0.5}, {1, -0.5})), 4.5);
  const EllipseGeometry down = ellipse_geometry(sides(Triangle({0, -0.5}, {-1, 0.5}, {1, 0.5})), 4.5);
  const double err = std::max({distance(up.center, down.center), std::abs(up.semi_major - down.semi_major),
                               std::abs(up.semi_minor - down.semi_minor),
                               angle_gap(up.rotation, down.rotation)});
  v.require(err <= 1e-9, fmt("ellipses differ by %.3g", err));
  if (v.pass) v.detail = fmt("both give x^2/%.12g + y^2/%.12g = 1", up.semi_major * up.semi_major,
                             up.semi_minor * up.semi_minor);
  return v;
}

}  // namespace
}  // namespace vloci

int main() {
  using namespace vloci;
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC01 3-4-5 right triangle: linear form", right_triangle_linear_form},
      {"AC02 3-4-5 right triangle: k-range and corner loci", right_triangle_k_range},
      {"AC03 3-4-5 right triangle: level direction", right_triangle_level_direction},
      {"AC04 3-4-5 right triangle: quadratic at k=5", right_triangle_quadratic},
      {"AC05 ellipse x^2/4 + y^2/2 = 1 inverse", ellipse_two_root_two},
      {"AC06 circle x^2 + y^2 = 6 inverse", circle_root_six},
      {"AC07 isosceles minimal squared sum", minimal_sum_isosceles},
      {"AC08 discriminant negative and closed form", ellipse_theorem},
      {"AC09 circle iff equilateral", circle_criterion},
      {"AC10 homothetic ellipse family", homothety},
      {"AC11 constant distance sum iff equilateral", viviani_equivalence},
      {"AC12 grid oracle agreement", oracle_equivalence},
      {"AC13 reflected triangle, same ellipse", non_uniqueness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    if (!v.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
