#pragma once

// Numeric tolerances shared by every module. Length-like tolerances are
// relative to the instance scale (bounding-box diagonal of the input);
// dimensionless quantities (unit normals, gradients of the distance sum)
// use the bare value.
namespace vloci::tol {

/// Relative geometric tolerance (lengths, chord collapse, side equality).
inline constexpr double kGeom = 1e-9;

/// Normalization slack for unit normals and the "point on line" test used
/// when orienting a line.
inline constexpr double kNormalization = 1e-12;

/// Threshold separating Empty / DegeneratePoint / Ellipse, relative to
/// max(1, k_min).
inline constexpr double kLocus = 1e-9;

/// Relative rank threshold of the 2x2 quadratic part, det <= kRank * trace^2
/// means all lines are treated as parallel.
inline constexpr double kRank = 1e-9;

/// Eigenvalue tie for circles: |l1 - l2| <= kEigenTie * (l1 + l2).
inline constexpr double kEigenTie = 1e-9;

}  // namespace vloci::tol
