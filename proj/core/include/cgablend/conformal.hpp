#pragma once

#include "cgablend/multivector.hpp"
#include "cgablend/rotor.hpp"

namespace cgablend {

struct Euclidean3 {
  double x = 0, y = 0, z = 0;

  Euclidean3 operator+(const Euclidean3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Euclidean3 operator-(const Euclidean3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Euclidean3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Euclidean3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Euclidean3& o) const { return x * o.x + y * o.y + z * o.z; }
  Euclidean3 cross(const Euclidean3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return dot(*this); }
  double norm() const;
  Euclidean3 normalized() const;
};

inline Euclidean3 operator*(double s, const Euclidean3& v) { return v * s; }

/// The null vector n = e4 + e0 representing the point at infinity.
const Multivector& infinity();
/// The companion null vector nbar = e4 - e0; the origin embeds as -nbar.
const Multivector& nbar();

/// Null vector of positive e0 component representing a Euclidean point.
/// Construction accepts any scale of a valid point (the sign is fixed to the
/// positive-e0 half of the null cone) but rejects non-null vectors.
class ConformalPoint {
 public:
  explicit ConformalPoint(const Multivector& v);
  const Multivector& mv() const { return v_; }

 private:
  Multivector v_;
};

/// X = 2x + x^2 n - nbar.
ConformalPoint embed_point(const Euclidean3& p);

/// Coordinate recovery x_i = -(X.e_i)/(X.n).  Scale-invariant.  Throws
/// PointAtInfinity when X.n vanishes.
Euclidean3 extract_point(const Multivector& x);
Euclidean3 extract_point(const ConformalPoint& x);

/// Rescales a null vector to the standard embedding form, A -> -2A/(A.n).
/// Throws PointAtInfinity / NonNullVector.
ConformalPoint normalize_point(const Multivector& a);

/// |x-y| from the conformal inner product; works at any scale of the inputs.
double point_distance(const ConformalPoint& x, const ConformalPoint& y);

/// Euclidean translation rotor carrying X to Y:
/// T = (n.Y) nX + (n.X) Yn.  Fixes the point at infinity.
Rotor translation_rotor(const ConformalPoint& x, const ConformalPoint& y);

/// True when the null vector represents the point at infinity (X.n ~ 0).
bool is_at_infinity(const Multivector& x);

}  // namespace cgablend
