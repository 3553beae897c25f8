#include "cgablend/frontend.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cgablend/errors.hpp"
#include "json.hpp"

namespace cgablend {

namespace {

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointsFile {
  std::vector<Euclidean3> points;
  std::vector<Euclidean3> apexes;
};

std::vector<Euclidean3> parse_triples(const nlohmann::json& arr, const char* key) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string("input: \"") + key + "\" must be an array");
  std::vector<Euclidean3> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number() ||
        !item[1].is_number() || !item[2].is_number())
      throw std::invalid_argument(std::string("input: every entry of \"") + key +
                                  "\" must be a [x,y,z] number triple");
    out.push_back({item[0].get<double>(), item[1].get<double>(), item[2].get<double>()});
  }
  return out;
}

PointsFile read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open input file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);  // throws json::parse_error
  if (!doc.is_object() || !doc.contains("points"))
    throw std::invalid_argument("input: expected an object with a \"points\" array");
  PointsFile file;
  file.points = parse_triples(doc["points"], "points");
  if (doc.contains("apexes")) file.apexes = parse_triples(doc["apexes"], "apexes");
  return file;
}

std::string format_number(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open output file: " + path);
  out << contents;
  out.flush();
  if (!out) throw IoFailure("write failed: " + path);
}

std::string curve_csv(const std::vector<CurveSample>& samples) {
  std::string out = "segment,lambda,x,y,z\n";
  for (const CurveSample& s : samples) {
    out += std::to_string(s.segment);
    out += ',';
    out += format_number(s.lambda, 15);
    out += ',';
    out += format_number(s.point.x, 15);
    out += ',';
    out += format_number(s.point.y, 15);
    out += ',';
    out += format_number(s.point.z, 15);
    out += '\n';
  }
  return out;
}

// Coplanarity gate for SVG output: max distance from the plane through three
// well-spread points, relative to the bounding-box diagonal.
bool coplanar(const std::vector<Euclidean3>& pts, double rel_tol) {
  if (pts.size() <= 3) return true;
  const Euclidean3& a = pts[0];
  const Euclidean3* b = &a;
  double best = 0;
  for (const Euclidean3& p : pts) {
    const double d = (p - a).norm2();
    if (d > best) {
      best = d;
      b = &p;
    }
  }
  if (best == 0) return true;
  Euclidean3 normal{0, 0, 0};
  double area = 0;
  for (const Euclidean3& p : pts) {
    const Euclidean3 cr = (*b - a).cross(p - a);
    if (cr.norm2() > area) {
      area = cr.norm2();
      normal = cr;
    }
  }
  if (area == 0) return true;  // collinear
  const Euclidean3 unit = normal.normalized();
  Euclidean3 lo = pts[0], hi = pts[0];
  double off = 0;
  for (const Euclidean3& p : pts) {
    off = std::max(off, std::fabs((p - a).dot(unit)));
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  const double diag = (hi - lo).norm();
  return off <= rel_tol * std::max(diag, 1e-300);
}

std::string curve_svg(const std::vector<CurveSample>& samples,
                      const std::vector<Euclidean3>& control_points) {
  if (!coplanar(control_points, 1e-6))
    throw std::invalid_argument("svg output requires coplanar control points");

  // Project out the coordinate of least variance.
  Euclidean3 mean{0, 0, 0};
  for (const CurveSample& s : samples) mean = mean + s.point;
  mean = mean / static_cast<double>(samples.size());
  Euclidean3 var{0, 0, 0};
  for (const CurveSample& s : samples) {
    const Euclidean3 d = s.point - mean;
    var = var + Euclidean3{d.x * d.x, d.y * d.y, d.z * d.z};
  }
  int drop = 0;
  double least = var.x;
  if (var.y < least) {
    least = var.y;
    drop = 1;
  }
  if (var.z < least) drop = 2;
  auto project = [&](const Euclidean3& p) -> std::pair<double, double> {
    switch (drop) {
      case 0: return {p.y, p.z};
      case 1: return {p.x, p.z};
      default: return {p.x, p.y};
    }
  };

  double lo_u = 1e300, hi_u = -1e300, lo_v = 1e300, hi_v = -1e300;
  for (const CurveSample& s : samples) {
    const auto [u, v] = project(s.point);
    lo_u = std::min(lo_u, u);
    hi_u = std::max(hi_u, u);
    lo_v = std::min(lo_v, v);
    hi_v = std::max(hi_v, v);
  }
  const double du = std::max(hi_u - lo_u, 1e-9);
  const double dv = std::max(hi_v - lo_v, 1e-9);
  const double margin = 0.05 * std::max(du, dv);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += format_number(lo_u - margin, 12) + " " + format_number(lo_v - margin, 12) + " " +
         format_number(du + 2 * margin, 12) + " " + format_number(dv + 2 * margin, 12);
  out += "\">\n";
  out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
         format_number(0.005 * std::max(du, dv), 6) + "\" points=\"";
  bool first = true;
  for (const CurveSample& s : samples) {
    const auto [u, v] = project(s.point);
    if (!first) out += ' ';
    // flip v so the curve reads y-up in screen coordinates
    out += format_number(u, 12) + "," + format_number(lo_v + hi_v - v, 12);
    first = false;
  }
  out += "\"/>\n</svg>\n";
  return out;
}

std::string surface_obj(const SurfaceMesh& mesh) {
  std::string out;
  for (const Euclidean3& v : mesh.vertices)
    out += "v " + format_number(v.x, 12) + " " + format_number(v.y, 12) + " " +
           format_number(v.z, 12) + "\n";
  for (const auto& f : mesh.faces)
    out += "f " + std::to_string(f[0] + 1) + " " + std::to_string(f[1] + 1) + " " +
           std::to_string(f[2] + 1) + "\n";
  return out;
}

std::string surface_csv(const TrianglePatch& patch, int n) {
  std::string out = "lambda,mu,nu,x,y,z\n";
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) {
      const Barycentric b(static_cast<double>(i) / n, static_cast<double>(j) / n,
                          static_cast<double>(n - i - j) / n);
      const Euclidean3 p = extract_point(evaluate_surface(patch, b));
      out += format_number(b.lambda, 15);
      out += ',';
      out += format_number(b.mu, 15);
      out += ',';
      out += format_number(b.nu, 15);
      out += ',';
      out += format_number(p.x, 15);
      out += ',';
      out += format_number(p.y, 15);
      out += ',';
      out += format_number(p.z, 15);
      out += '\n';
    }
  return out;
}

template <typename Fn>
int guarded(std::ostream& diagnostics, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const nlohmann::json::exception& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoFailure& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 4;
  } catch (const GeometryError& e) {
    diagnostics << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int run_curve(const CurveRequest& req, std::ostream& diagnostics) {
  return guarded(diagnostics, [&] {
    const PointsFile file = read_points_file(req.input_path);
    SplineSpec spec;
    spec.control_points = file.points;
    spec.closed = req.closed;
    spec.profile = BlendProfile::geometric(req.continuity);
    spec.samples_per_segment = req.samples;
    spec.refine_depth = req.refine;
    const std::vector<CurveSample> samples = build_spline(spec);
    write_file(req.output_path, req.format == CurveFormat::Csv
                                    ? curve_csv(samples)
                                    : curve_svg(samples, file.points));
  });
}

int run_surface(const SurfaceRequest& req, std::ostream& diagnostics) {
  return guarded(diagnostics, [&] {
    const PointsFile file = read_points_file(req.input_path);
    if (file.points.size() != 3 || file.apexes.size() != 3)
      throw std::invalid_argument(
          "surface input needs exactly 3 \"points\" and 3 \"apexes\"");
    const TrianglePatch patch =
        make_patch(embed_point(file.points[0]), embed_point(file.points[1]),
                   embed_point(file.points[2]), embed_point(file.apexes[0]),
                   embed_point(file.apexes[1]), embed_point(file.apexes[2]));
    if (req.format == SurfaceFormat::Obj)
      write_file(req.output_path, surface_obj(sample_mesh(patch, req.subdivisions)));
    else
      write_file(req.output_path, surface_csv(patch, req.subdivisions));
  });
}

int run_inspect(const std::string& input_path, std::ostream& out,
                std::ostream& diagnostics) {
  return guarded(diagnostics, [&] {
    const PointsFile file = read_points_file(input_path);
    if (file.points.size() < 3)
      throw std::invalid_argument("inspect needs at least 3 points");

    std::vector<Circle> circles;
    for (std::size_t i = 0; i + 2 < file.points.size(); ++i)
      circles.push_back(circle_through(embed_point(file.points[i]),
                                       embed_point(file.points[i + 1]),
                                       embed_point(file.points[i + 2])));
    char buf[256];
    for (std::size_t i = 0; i < circles.size(); ++i) {
      std::string line;
      if (is_flat(circles[i])) {
        line = "triple " + std::to_string(i) + ": line";
      } else {
        const Euclidean3 c = extract_point(center_of(circles[i]));
        std::snprintf(buf, sizeof buf,
                      "triple %zu: radius=%.12f centre=(%.12f, %.12f, %.12f)", i,
                      circle_radius(circles[i]), c.x, c.y, c.z);
        line = buf;
      }
      if (i + 1 < circles.size()) {
        std::snprintf(buf, sizeof buf, " theta=%.12f",
                      angle_between(circles[i], circles[i + 1]));
        line += buf;
      }
      out << line << "\n";
    }
  });
}

}  // namespace cgablend
