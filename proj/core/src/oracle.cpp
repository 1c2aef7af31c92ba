#include "vloci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vloci/error.hpp"

namespace vloci::oracle {

double point_line_distance(Point p, Point q1, Point q2) {
  const double dx = q2.x - q1.x;
  const double dy = q2.y - q1.y;
  return std::abs(dx * (p.y - q1.y) - dy * (p.x - q1.x)) / std::sqrt(dx * dx + dy * dy);
}

bool inside_convex(std::span<const Point> polygon, Point p, double slack) {
  double twice_area = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point q1 = polygon[i];
    const Point q2 = polygon[(i + 1) % polygon.size()];
    twice_area += q1.x * q2.y - q2.x * q1.y;
  }
  const double sign = twice_area < 0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point q1 = polygon[i];
    const Point q2 = polygon[(i + 1) % polygon.size()];
    const double dx = q2.x - q1.x;
    const double dy = q2.y - q1.y;
    const double side = sign * (dx * (p.y - q1.y) - dy * (p.x - q1.x)) / std::hypot(dx, dy);
    if (side < -slack) return false;
  }
  return true;
}

double distance_sum(std::span<const Point> polygon, Point p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    sum += point_line_distance(p, polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return sum;
}

double squared_distance_sum(std::span<const LineSpec> lines, Point p) {
  double sum = 0.0;
  for (const auto& [q1, q2] : lines) {
    const double d = point_line_distance(p, q1, q2);
    sum += d * d;
  }
  return sum;
}

std::vector<LineSpec> edge_specs(std::span<const Point> polygon) {
  std::vector<LineSpec> out;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    out.emplace_back(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return out;
}

GridSpec::GridSpec(Bounds box, int resolution) : box_(box), resolution_(resolution) {
  if (resolution < 16 || resolution > 4096) {
    throw GeometryError(ErrorCode::kInvalidGrid, "grid resolution must be in [16, 4096]");
  }
  if (!(box.width() > 0) || !(box.height() > 0) || !std::isfinite(box.diagonal())) {
    throw GeometryError(ErrorCode::kInvalidGrid, "grid box is degenerate");
  }
}

Point GridSpec::sample(int i, int j) const {
  return {box_.min.x + i * cell_x(), box_.min.y + j * cell_y()};
}

namespace {

GridMinimum scan(const Objective& objective, const GridSpec& grid) {
  GridMinimum best{std::numeric_limits<double>::infinity(), grid.box().min};
  for (int j = 0; j < grid.resolution(); ++j) {
    for (int i = 0; i < grid.resolution(); ++i) {
      const Point p = grid.sample(i, j);
      const double v = objective(p);
      if (std::isfinite(v) && v < best.value) best = {v, p};
    }
  }
  return best;
}

}  // namespace

GridMinimum grid_min(const Objective& objective, const GridSpec& grid) {
  GridMinimum best = scan(objective, grid);
  GridSpec current = grid;
  for (int round = 0; round < 3; ++round) {
    if (!std::isfinite(best.value)) break;
    // Shrink 10x, but never below two cells on each side of the best sample
    // so the true minimum stays inside the box.
    const double hx = std::max(current.box().width() / 20.0, 2.0 * current.cell_x());
    const double hy = std::max(current.box().height() / 20.0, 2.0 * current.cell_y());
    current = GridSpec({{best.at.x - hx, best.at.y - hy}, {best.at.x + hx, best.at.y + hy}},
                       grid.resolution());
    const GridMinimum refined = scan(objective, current);
    if (refined.value < best.value) best = refined;
  }
  return best;
}

std::vector<Point> grid_level_points(const Objective& objective, double k, const GridSpec& grid,
                                     double tol) {
  if (!(tol > 0)) throw GeometryError(ErrorCode::kInvalidArgument, "tolerance must be positive");
  std::vector<Point> out;
  for (int j = 0; j < grid.resolution(); ++j) {
    for (int i = 0; i < grid.resolution(); ++i) {
      const Point p = grid.sample(i, j);
      const double v = objective(p);
      if (std::isfinite(v) && std::abs(v - k) <= tol) out.push_back(p);
    }
  }
  return out;
}

}  // namespace vloci::oracle
