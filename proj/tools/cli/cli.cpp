#include "cli/cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "cli/scene.hpp"
#include "vloci/error.hpp"

namespace vloci::cli {

namespace {

struct Flags {
  std::string triangle;
  std::string polygon;
  std::string lines;
  std::string scene_file;
  std::string k_list;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string plot;
  bool verify = false;
};

void add_scene_flags(CLI::App* sub, Flags& f, bool allow_lines) {
  sub->add_option("--triangle", f.triangle, "Three vertices, e.g. \"0,0 0,3 4,0\"");
  sub->add_option("--polygon", f.polygon, "Convex polygon vertices, e.g. \"0,0 1,0 1,1 0,1\"");
  if (allow_lines) {
    sub->add_option("--lines", f.lines, "Lines as point pairs, e.g. \"0,0 1,0; 0,2 1,2\"");
  }
  sub->add_option("--scene", f.scene_file, "JSON scene file");
}

Scene scene_from_flags(const Flags& f) {
  const int given = static_cast<int>(!f.triangle.empty()) + static_cast<int>(!f.polygon.empty()) +
                    static_cast<int>(!f.lines.empty()) + static_cast<int>(!f.scene_file.empty());
  if (given != 1) {
    throw SceneError("give exactly one of --triangle, --polygon, --lines, --scene");
  }
  Scene scene;
  if (!f.scene_file.empty()) {
    scene = load_scene_file(f.scene_file);
    if (scene.points.empty() && scene.line_specs.empty()) {
      throw SceneError("scene file has no shape");
    }
  } else if (!f.triangle.empty()) {
    scene.kind = ShapeKind::kTriangle;
    scene.points = parse_points(f.triangle);
  } else if (!f.polygon.empty()) {
    scene.kind = ShapeKind::kPolygon;
    scene.points = parse_points(f.polygon);
  } else {
    scene.kind = ShapeKind::kLines;
    scene.line_specs = parse_line_specs(f.lines);
  }
  if (!f.k_list.empty()) scene.k = parse_k_list(f.k_list);
  return scene;
}

CommandOptions options_from_flags(const Flags& f) {
  CommandOptions opts;
  opts.verify = f.verify;
  if (!f.plot.empty()) opts.plot = f.plot;
  return opts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loci of points with constant (squared) distance sums to polygon sides", "vloci"};
  app.require_subcommand(1);
  Flags f;

  auto* sum = app.add_subcommand("sum-locus", "Constant sum of distances inside a convex polygon");
  add_scene_flags(sum, f, /*allow_lines=*/true);
  sum->add_option("--k", f.k_list, "Comma-separated k values");
  sum->add_option("--plot", f.plot, "Write an SVG figure");
  sum->add_flag("--verify", f.verify, "Cross-check against the grid oracle");

  auto* squared = app.add_subcommand("squared-locus", "Constant sum of squared distances");
  add_scene_flags(squared, f, true);
  squared->add_option("--k", f.k_list, "Comma-separated k values");
  squared->add_option("--plot", f.plot, "Write an SVG figure");
  squared->add_flag("--verify", f.verify, "Cross-check against the grid oracle");

  auto* mins = app.add_subcommand("min-squares", "Minimal sum of squared distances");
  add_scene_flags(mins, f, true);
  mins->add_flag("--verify", f.verify, "Cross-check against the grid oracle");

  auto* inverse = app.add_subcommand("triangle-from-ellipse",
                                     "Isosceles triangle realizing a canonical ellipse");
  inverse->add_option("--alpha", f.alpha, "Semi-major axis");
  inverse->add_option("--beta", f.beta, "Semi-minor axis");
  inverse->add_option("--scene", f.scene_file, "JSON file with alpha and beta");
  inverse->add_option("--plot", f.plot, "Write an SVG figure");
  inverse->add_flag("--verify", f.verify, "Sample the ellipse and check the level value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vloci: " << e.what() << '\n';
    return kExitBadArguments;
  }

  try {
    const CommandOptions opts = options_from_flags(f);
    Json report;
    if (sum->parsed()) {
      const Scene scene = scene_from_flags(f);
      report = sum_locus_report(scene, scene.k, opts);
    } else if (squared->parsed()) {
      const Scene scene = scene_from_flags(f);
      report = squared_locus_report(scene, scene.k, opts);
    } else if (mins->parsed()) {
      report = min_squares_report(scene_from_flags(f), opts);
    } else {
      std::optional<double> alpha = f.alpha;
      std::optional<double> beta = f.beta;
      if (!f.scene_file.empty()) {
        const Scene scene = load_scene_file(f.scene_file);
        if (!alpha) alpha = scene.alpha;
        if (!beta) beta = scene.beta;
      }
      if (!alpha || !beta) throw SceneError("--alpha and --beta are required");
      report = triangle_from_ellipse_report(*alpha, *beta, opts);
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const KListError& e) {
    err << "vloci: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const SceneError& e) {
    err << "vloci: " << e.what() << '\n';
    return kExitInvalidScene;
  } catch (const GeometryError& e) {
    err << "vloci: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitInvalidScene;
  } catch (const std::runtime_error& e) {
    err << "vloci: " << e.what() << '\n';
    return kExitInvalidScene;
  }
}

}  // namespace vloci::cli
