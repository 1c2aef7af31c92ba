#pragma once

#include "vloci/geometry.hpp"

namespace vloci {

/// Shape parameters of the isosceles family A(0, a), B(-b, 0), C(b, 0)
/// and the downward shift l that centers its ellipses at the origin.
struct IsoscelesParams {
  double a;
  double b;
  double l;
};

struct InverseResult {
  Triangle triangle;  // (0, a - l), (-b, -l), (b, -l)
  double k;
  IsoscelesParams params;
};

/// Isosceles triangle and constant k whose squared-distance locus is the
/// canonical ellipse x^2/alpha^2 + y^2/beta^2 = 1. The apex points up.
/// Throws InvalidAxes unless alpha >= beta > 0.
InverseResult triangle_from_ellipse(double alpha, double beta);

/// Right-hand side of the centered form of the isosceles locus
///   x^2/(a^2+3b^2) + (y - l)^2/(2a^2) = rhs.
/// Equals 1 for the k produced by triangle_from_ellipse and 0 at the minimal
/// sum 2a^2b^2/(a^2+3b^2). Throws InvalidArgument unless a, b > 0.
double canonical_rhs(double a, double b, double k);

}  // namespace vloci
