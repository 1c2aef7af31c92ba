#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "vloci/geometry.hpp"

// Brute-force reference evaluations. Nothing here goes through OrientedLine
// or the closed-form locus code, so tests and `--verify` can use these as an
// independent second route.
namespace vloci::oracle {

/// Unsigned distance from p to the line through q1 and q2.
double point_line_distance(Point p, Point q1, Point q2);

/// p lies in the closed convex polygon (either winding) up to `slack`
/// measured as a distance.
bool inside_convex(std::span<const Point> polygon, Point p, double slack = 0.0);

/// Sum of distances from p to the lines carrying the polygon edges.
double distance_sum(std::span<const Point> polygon, Point p);

using LineSpec = std::pair<Point, Point>;

/// Sum of squared distances from p to each line given by two points.
double squared_distance_sum(std::span<const LineSpec> lines, Point p);

/// Edges of a polygon as two-point line specs.
std::vector<LineSpec> edge_specs(std::span<const Point> polygon);

/// Regular sampling of a box, `resolution` samples per axis including both
/// ends. Throws InvalidGrid for a degenerate box or resolution outside
/// [16, 4096].
class GridSpec {
 public:
  GridSpec(Bounds box, int resolution);

  const Bounds& box() const { return box_; }
  int resolution() const { return resolution_; }
  Point sample(int i, int j) const;
  double cell_x() const { return box_.width() / (resolution_ - 1); }
  double cell_y() const { return box_.height() / (resolution_ - 1); }

 private:
  Bounds box_;
  int resolution_;
};

using Objective = std::function<double(Point)>;

struct GridMinimum {
  double value;
  Point at;
};

/// Grid minimum followed by three zoom rounds around the best sample.
/// Non-finite objective values are skipped.
GridMinimum grid_min(const Objective& objective, const GridSpec& grid);

/// Samples with |objective - k| <= tol, in row-major order.
std::vector<Point> grid_level_points(const Objective& objective, double k, const GridSpec& grid,
                                     double tol);

}  // namespace vloci::oracle
