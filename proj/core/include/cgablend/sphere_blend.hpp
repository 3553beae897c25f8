#pragma once

#include <array>
#include <vector>

#include "cgablend/primitives.hpp"

namespace cgablend {

// Triangular surface patches: a sphere is attached to each triangle corner
// (through the three vertices and a per-corner apex control point), the
// spheres are blended linearly over barycentric coordinates, and the flat
// triangle is carried onto the blended sphere by the rotor 1 - S P.

/// Barycentric weights (lambda, mu, nu): nonnegative, summing to one.
struct Barycentric {
  Barycentric(double lambda, double mu, double nu);
  double lambda, mu, nu;
};

struct TrianglePatch {
  std::array<ConformalPoint, 3> vertices;
  std::array<ConformalPoint, 3> apexes;
  std::array<Sphere, 3> corner_spheres;  ///< unit-magnitude S_i = A_i ^ X1 ^ X2 ^ X3
  Sphere plane;                          ///< unit-magnitude triangle plane
  std::array<Euclidean3, 3> corners;     ///< extracted vertex coordinates
};

/// Builds the corner spheres S_i = A_i ^ X1 ^ X2 ^ X3 and the triangle plane.
/// Throws DegenerateObject for collinear vertices or an apex on the
/// circumcircle of the vertices.  An apex lying in the triangle plane (but
/// off the circumcircle) yields a flat corner sphere, which is accepted.
TrianglePatch make_patch(const ConformalPoint& x1, const ConformalPoint& x2,
                         const ConformalPoint& x3, const ConformalPoint& a1,
                         const ConformalPoint& a2, const ConformalPoint& a3);

/// Embedded barycentric combination of the triangle vertices.
ConformalPoint barycentric_point(const TrianglePatch& patch, const Barycentric& b);

/// Linear blend lambda S1 + mu S2 + nu S3 of the unit corner spheres
/// (returned unnormalized).  Throws DegenerateObject when the blend vanishes.
Sphere blend_spheres(const TrianglePatch& patch, const Barycentric& b);

/// Surface point X = R Y R~ with R = 1 - S(b) P.  Throws OppositeObjects when
/// the blended sphere is anti-parallel to the plane.
ConformalPoint evaluate_surface(const TrianglePatch& patch, const Barycentric& b);

struct SurfaceMesh {
  std::vector<Euclidean3> vertices;
  std::vector<std::array<int, 3>> faces;  ///< indices into vertices
};

/// Samples the patch on the regular barycentric lattice with n subdivisions:
/// (n+1)(n+2)/2 vertices, n^2 faces.  Faces follow the lattice winding.
SurfaceMesh sample_mesh(const TrianglePatch& patch, int n);

}  // namespace cgablend
