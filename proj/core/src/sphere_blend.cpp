#include "cgablend/sphere_blend.hpp"

#include <cmath>
#include <stdexcept>

#include "cgablend/errors.hpp"

namespace cgablend {

namespace {
constexpr double kOppositeTol = 1e-10;
}

Barycentric::Barycentric(double l, double m, double n) : lambda(l), mu(m), nu(n) {
  constexpr double kSlack = 1e-9;
  if (lambda < -kSlack || mu < -kSlack || nu < -kSlack)
    throw std::invalid_argument("Barycentric: weights must be nonnegative");
  if (std::fabs(lambda + mu + nu - 1.0) > kSlack)
    throw std::invalid_argument("Barycentric: weights must sum to one");
  lambda = std::max(0.0, lambda);
  mu = std::max(0.0, mu);
  nu = std::max(0.0, nu);
}

TrianglePatch make_patch(const ConformalPoint& x1, const ConformalPoint& x2,
                         const ConformalPoint& x3, const ConformalPoint& a1,
                         const ConformalPoint& a2, const ConformalPoint& a3) {
  const Multivector tri = (x1.mv() ^ x2.mv()) ^ x3.mv();
  const double tri_scale = x1.mv().coeff_norm_inf() * x2.mv().coeff_norm_inf() *
                           x3.mv().coeff_norm_inf();
  if (tri.coeff_norm_inf() < 1e-12 * tri_scale)
    throw DegenerateObject("make_patch: coincident vertices");
  const Multivector plane_mv = tri ^ infinity();
  if (plane_mv.coeff_norm_inf() < 1e-12 * tri_scale)
    throw DegenerateObject("make_patch: collinear vertices");

  int plane_sign = 0;
  const Sphere plane = normalized(Sphere(plane_mv), &plane_sign);

  auto corner_sphere = [&](const ConformalPoint& apex, int* sign) {
    const Multivector s = apex.mv() ^ tri;
    if (s.coeff_norm_inf() < 1e-12 * tri_scale * apex.mv().coeff_norm_inf())
      throw DegenerateObject("make_patch: apex lies on the circumcircle of the vertices");
    return normalized(Sphere(s), sign);
  };
  int s1 = 0, s2 = 0, s3 = 0;
  const Sphere sp1 = corner_sphere(a1, &s1);
  const Sphere sp2 = corner_sphere(a2, &s2);
  const Sphere sp3 = corner_sphere(a3, &s3);
  if (s1 != s2 || s2 != s3 || s1 != plane_sign)
    throw DegenerateObject("make_patch: sphere magnitude signs disagree");

  return TrianglePatch{{x1, x2, x3},
                       {a1, a2, a3},
                       {sp1, sp2, sp3},
                       plane,
                       {extract_point(x1), extract_point(x2), extract_point(x3)}};
}

ConformalPoint barycentric_point(const TrianglePatch& patch, const Barycentric& b) {
  return embed_point(patch.corners[0] * b.lambda + patch.corners[1] * b.mu +
                     patch.corners[2] * b.nu);
}

Sphere blend_spheres(const TrianglePatch& patch, const Barycentric& b) {
  const Multivector s = b.lambda * patch.corner_spheres[0].mv() +
                        b.mu * patch.corner_spheres[1].mv() +
                        b.nu * patch.corner_spheres[2].mv();
  if (s.coeff_norm_inf() < 1e-9)
    throw DegenerateObject("blend_spheres: blended sphere vanished");
  return Sphere(s);
}

ConformalPoint evaluate_surface(const TrianglePatch& patch, const Barycentric& b) {
  const Sphere blend = normalized(blend_spheres(patch, b));
  const Multivector r = Multivector::scalar(1.0) - blend.mv() * patch.plane.mv();
  const double n2 = (r * reverse(r)).scalar_part();
  if (n2 <= kOppositeTol)
    throw OppositeObjects("evaluate_surface: blended sphere anti-parallel to the plane");
  const Rotor rotor = Rotor(r).normalized();
  const ConformalPoint y = barycentric_point(patch, b);
  return ConformalPoint(rotor.apply(y.mv()).grade_part(GradeIndex(1)));
}

SurfaceMesh sample_mesh(const TrianglePatch& patch, int n) {
  if (n < 1) throw std::invalid_argument("sample_mesh: subdivision count must be >= 1");

  SurfaceMesh mesh;
  mesh.vertices.reserve((n + 1) * (n + 2) / 2);

  // Lattice rows indexed by i (weight of X1), columns by j (weight of X2).
  std::vector<int> row_offset(n + 2, 0);
  for (int i = 0; i <= n; ++i) {
    row_offset[i + 1] = row_offset[i] + (n - i + 1);
    for (int j = 0; j <= n - i; ++j) {
      const Barycentric b(static_cast<double>(i) / n, static_cast<double>(j) / n,
                          static_cast<double>(n - i - j) / n);
      mesh.vertices.push_back(extract_point(evaluate_surface(patch, b)));
    }
  }

  auto index = [&](int i, int j) { return row_offset[i] + j; };
  mesh.faces.reserve(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n - i; ++j) {
      mesh.faces.push_back({index(i, j), index(i, j + 1), index(i + 1, j)});
      if (j + 1 < n - i)
        mesh.faces.push_back({index(i + 1, j), index(i, j + 1), index(i + 1, j + 1)});
    }
  return mesh;
}

}  // namespace cgablend
