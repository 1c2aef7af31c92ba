#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "cli/scene.hpp"
#include "vloci/quadratic_locus.hpp"

namespace vloci::cli {

using Json = nlohmann::ordered_json;

struct CommandOptions {
  bool verify = false;
  std::optional<std::string> plot;
};

// Each report is a JSON object with keys {input, analysis, results,
// verification} in that order. Numbers carry 12 significant digits.
Json sum_locus_report(const Scene& scene, std::span<const double> ks, const CommandOptions& opts);
Json squared_locus_report(const Scene& scene, std::span<const double> ks,
                          const CommandOptions& opts);
Json min_squares_report(const Scene& scene, const CommandOptions& opts);
Json triangle_from_ellipse_report(double alpha, double beta, const CommandOptions& opts);

/// Rounds to 12 significant digits; maps -0 to 0.
double round_sig(double v);

/// Smallest positive integer multiple of (Q - k) whose coefficients are all
/// integers (denominators up to `max_denominator`), reduced by their gcd.
/// Order: x^2, xy, y^2, x, y, constant.
std::optional<std::array<long long, 6>> integer_coefficients(const QuadraticForm& q, double k,
                                                             int max_denominator = 1000);

/// "34x^2+24xy+41y^2-72x-96y+19=0".
std::string equation_string(const std::array<long long, 6>& coef);

}  // namespace vloci::cli
