#pragma once

#include <iosfwd>
#include <string>

#include "cgablend/circle_blend.hpp"
#include "cgablend/sphere_blend.hpp"

namespace cgablend {

// Batch front end: read control-point files, write sampled curves/surfaces
// and diagnostics.  Input files are JSON objects of the form
//   {"points": [[x,y,z], ...], "apexes": [[x,y,z], ...]}
// with "apexes" only required for surface patches.
//
// Exit codes: 0 success, 2 parse/usage failure, 3 geometric degeneracy
// (pathological configuration, degenerate patch), 4 i/o failure.

enum class CurveFormat { Csv, Svg };
enum class SurfaceFormat { Obj, Csv };

struct CurveRequest {
  std::string input_path;
  std::string output_path;
  int continuity = 2;      ///< G-continuity order (1..)
  int samples = 64;        ///< samples per segment
  bool closed = false;
  int refine = 0;          ///< midpoint refinement passes
  CurveFormat format = CurveFormat::Csv;
};

struct SurfaceRequest {
  std::string input_path;
  std::string output_path;
  int subdivisions = 16;
  SurfaceFormat format = SurfaceFormat::Obj;
};

/// Samples the spline and writes it as CSV (columns segment,lambda,x,y,z) or
/// as an SVG polyline.  SVG requires coplanar input points; the projection
/// drops the coordinate of least variance.
int run_curve(const CurveRequest& req, std::ostream& diagnostics);

/// Samples the patch and writes an OBJ mesh (v lines then 1-indexed f lines)
/// or a CSV of lattice samples (columns lambda,mu,nu,x,y,z).
int run_surface(const SurfaceRequest& req, std::ostream& diagnostics);

/// Per-triple diagnostics: through-circle radius (or "line"), centre, and the
/// blend angle to the next through-circle.  One record per line.
int run_inspect(const std::string& input_path, std::ostream& out,
                std::ostream& diagnostics);

}  // namespace cgablend
