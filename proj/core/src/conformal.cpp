#include "cgablend/conformal.hpp"

#include <cmath>

#include "cgablend/errors.hpp"

namespace cgablend {

namespace {
// Relative tolerance for the null and at-infinity checks.
constexpr double kRelTol = 1e-9;
constexpr unsigned kMaskE0 = 1u << 0;
}  // namespace

double Euclidean3::norm() const { return std::sqrt(norm2()); }

Euclidean3 Euclidean3::normalized() const {
  const double n = norm();
  return {x / n, y / n, z / n};
}

const Multivector& infinity() {
  static const Multivector n = Multivector::basis(4) + Multivector::basis(0);
  return n;
}

const Multivector& nbar() {
  static const Multivector nb = Multivector::basis(4) - Multivector::basis(0);
  return nb;
}

ConformalPoint::ConformalPoint(const Multivector& v) : v_(v) {
  const double scale = v.coeff_norm_inf();
  if (scale == 0.0) throw DegenerateObject("conformal point: zero vector");
  if (!v.pure_grade(1, kRelTol))
    throw NonNullVector("conformal point: input is not a vector");
  const double sq = (v | v).scalar_part();
  if (std::fabs(sq) > kRelTol * scale * scale)
    throw NonNullVector("conformal point: vector is not null");
  if (v_[kMaskE0] < 0.0) v_ = -v_;
}

ConformalPoint embed_point(const Euclidean3& p) {
  const double p2 = p.norm2();
  Multivector v;
  v.set(1u << 1, 2.0 * p.x);
  v.set(1u << 2, 2.0 * p.y);
  v.set(1u << 3, 2.0 * p.z);
  // x^2 n - nbar, with n = e4 + e0 and nbar = e4 - e0.
  v.set(1u << 4, p2 - 1.0);
  v.set(1u << 0, p2 + 1.0);
  return ConformalPoint(v);
}

Euclidean3 extract_point(const Multivector& x) {
  const double xn = (x | infinity()).scalar_part();
  if (std::fabs(xn) <= kRelTol * x.coeff_norm_inf())
    throw PointAtInfinity("extract_point: point at infinity");
  auto coord = [&](int i) { return -(x | Multivector::basis(i)).scalar_part() / xn; };
  return {coord(1), coord(2), coord(3)};
}

Euclidean3 extract_point(const ConformalPoint& x) { return extract_point(x.mv()); }

ConformalPoint normalize_point(const Multivector& a) {
  const double an = (a | infinity()).scalar_part();
  if (std::fabs(an) <= kRelTol * a.coeff_norm_inf())
    throw PointAtInfinity("normalize_point: point at infinity");
  return ConformalPoint(a * (-2.0 / an));
}

double point_distance(const ConformalPoint& x, const ConformalPoint& y) {
  const double xn = (x.mv() | infinity()).scalar_part();
  const double yn = (y.mv() | infinity()).scalar_part();
  if (std::fabs(xn) <= kRelTol * x.mv().coeff_norm_inf() ||
      std::fabs(yn) <= kRelTol * y.mv().coeff_norm_inf())
    throw PointAtInfinity("point_distance: point at infinity");
  const double xy = (x.mv() | y.mv()).scalar_part();
  const double d2 = -2.0 * xy / (xn * yn);
  return std::sqrt(std::max(0.0, d2));
}

Rotor translation_rotor(const ConformalPoint& x, const ConformalPoint& y) {
  const Multivector& n = infinity();
  const double nx = (n | x.mv()).scalar_part();
  const double ny = (n | y.mv()).scalar_part();
  if (std::fabs(nx) <= kRelTol * x.mv().coeff_norm_inf() ||
      std::fabs(ny) <= kRelTol * y.mv().coeff_norm_inf())
    throw PointAtInfinity("translation_rotor: point at infinity");
  return Rotor(ny * (n * x.mv()) + nx * (y.mv() * n));
}

bool is_at_infinity(const Multivector& x) {
  return std::fabs((x | infinity()).scalar_part()) <= kRelTol * x.coeff_norm_inf();
}

}  // namespace cgablend
