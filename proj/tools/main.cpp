#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cgablend/frontend.hpp"

namespace {

const std::map<std::string, int> kContinuity{{"g1", 1}, {"g2", 2}, {"g3", 3}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle-blended splines and sphere-blended surface patches"};
  app.require_subcommand(1);

  cgablend::CurveRequest curve;
  std::string curve_continuity = "g2";
  std::string curve_format = "csv";
  CLI::App* curve_cmd = app.add_subcommand("curve", "Sample a circle-blended spline");
  curve_cmd->add_option("input", curve.input_path, "JSON control-point file")->required();
  curve_cmd->add_option("--output", curve.output_path, "Output file")->required();
  curve_cmd->add_option("--continuity", curve_continuity, "Continuity order")
      ->check(CLI::IsMember({"g1", "g2", "g3"}))
      ->capture_default_str();
  curve_cmd->add_option("--samples", curve.samples, "Samples per segment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curve_cmd->add_flag("--closed", curve.closed, "Treat the control polygon as closed");
  curve_cmd->add_option("--refine", curve.refine, "Midpoint refinement passes")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  curve_cmd->add_option("--format", curve_format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();

  cgablend::SurfaceRequest surface;
  std::string surface_format = "obj";
  CLI::App* surface_cmd =
      app.add_subcommand("surface", "Sample a sphere-blended triangular patch");
  surface_cmd->add_option("input", surface.input_path, "JSON vertex/apex file")->required();
  surface_cmd->add_option("--output", surface.output_path, "Output file")->required();
  surface_cmd->add_option("--subdiv", surface.subdivisions, "Barycentric subdivisions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  surface_cmd->add_option("--format", surface_format, "Output format")
      ->check(CLI::IsMember({"obj", "csv"}))
      ->capture_default_str();

  std::string inspect_input;
  CLI::App* inspect_cmd =
      app.add_subcommand("inspect", "Report through-circle radii, centres and blend angles");
  inspect_cmd->add_option("input", inspect_input, "JSON control-point file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  if (*curve_cmd) {
    curve.continuity = kContinuity.at(curve_continuity);
    curve.format = curve_format == "svg" ? cgablend::CurveFormat::Svg
                                         : cgablend::CurveFormat::Csv;
    return cgablend::run_curve(curve, std::cerr);
  }
  if (*surface_cmd) {
    surface.format = surface_format == "csv" ? cgablend::SurfaceFormat::Csv
                                             : cgablend::SurfaceFormat::Obj;
    return cgablend::run_surface(surface, std::cerr);
  }
  return cgablend::run_inspect(inspect_input, std::cout, std::cerr);
}
