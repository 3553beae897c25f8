#include "cgablend/primitives.hpp"

#include <algorithm>
#include <cmath>

#include "cgablend/errors.hpp"

namespace cgablend {

namespace {

constexpr double kRelTol = 1e-9;
// Homogeneous objects have no absolute scale: an object is treated as zero
// when it is this small relative to the product scale of its inputs.
constexpr double kZeroTol = 1e-12;

void check_grade(const Multivector& m, int grade, const char* what) {
  if (!m.pure_grade(grade, kRelTol)) throw std::invalid_argument(std::string(what) + ": wrong grade");
}

double input_scale(std::initializer_list<const Multivector*> ms) {
  double s = 1.0;
  for (const Multivector* m : ms) s *= m->coeff_norm_inf();
  return s;
}

}  // namespace

PointPair::PointPair(const Multivector& m) : m_(m.grade_part(GradeIndex(2))) {
  check_grade(m, 2, "point pair");
  if (m_.coeff_norm_inf() == 0.0) throw DegenerateObject("point pair: zero bivector");
}

double PointPair::square() const { return (m_ * m_).scalar_part(); }

Circle::Circle(const Multivector& m) : m_(m.grade_part(GradeIndex(3))) {
  check_grade(m, 3, "circle");
  if (m_.coeff_norm_inf() == 0.0) throw DegenerateObject("circle: zero trivector");
}

Sphere::Sphere(const Multivector& m) : m_(m.grade_part(GradeIndex(4))) {
  check_grade(m, 4, "sphere");
  if (m_.coeff_norm_inf() == 0.0) throw DegenerateObject("sphere: zero 4-vector");
}

Circle circle_through(const ConformalPoint& x1, const ConformalPoint& x2,
                      const ConformalPoint& x3) {
  const Multivector m = (x1.mv() ^ x2.mv()) ^ x3.mv();
  if (m.coeff_norm_inf() < kZeroTol * input_scale({&x1.mv(), &x2.mv(), &x3.mv()}))
    throw DegenerateObject("circle_through: coincident points");
  return Circle(m);
}

Circle line_through(const ConformalPoint& x1, const ConformalPoint& x2) {
  const Multivector m = (x1.mv() ^ x2.mv()) ^ infinity();
  if (m.coeff_norm_inf() < kZeroTol * input_scale({&x1.mv(), &x2.mv()}))
    throw DegenerateObject("line_through: coincident points");
  return Circle(m);
}

namespace {

bool is_flat_mv(const Multivector& m, const char* what) {
  const double scale = m.coeff_norm_inf();
  if (scale == 0.0) throw DegenerateObject(std::string(what) + ": zero object");
  return (m ^ infinity()).coeff_norm_inf() <= kRelTol * scale;
}

}  // namespace

bool is_flat(const Circle& c) { return is_flat_mv(c.mv(), "is_flat(circle)"); }
bool is_flat(const Sphere& s) { return is_flat_mv(s.mv(), "is_flat(sphere)"); }

namespace {

double round_radius(const Multivector& m, int grade, const char* what) {
  if (is_flat_mv(m, what)) throw InfiniteRadius(std::string(what) + ": flat object");
  const double m2 = (m * m).scalar_part();
  const Multivector w = m ^ infinity();
  const double w2 = (w * w).scalar_part();
  // rho^2 = -L^2/(L^n)^2 for circles; the square of a real round object
  // alternates sign with grade, so the sphere case flips.
  const double rho2 = (grade == 3 ? -1.0 : 1.0) * m2 / w2;
  if (!(rho2 > 0.0)) throw DegenerateObject(std::string(what) + ": imaginary round object");
  return std::sqrt(rho2);
}

ConformalPoint round_center(const Multivector& m, const char* what) {
  if (is_flat_mv(m, what)) throw PointAtInfinity(std::string(what) + ": flat object, centre at infinity");
  const Multivector c = (m * infinity() * m).grade_part(GradeIndex(1));
  return normalize_point(c);
}

}  // namespace

double circle_radius(const Circle& c) { return round_radius(c.mv(), 3, "circle_radius"); }
double sphere_radius(const Sphere& s) { return round_radius(s.mv(), 4, "sphere_radius"); }

ConformalPoint center_of(const Circle& c) { return round_center(c.mv(), "center_of"); }
ConformalPoint center_of(const Sphere& s) { return round_center(s.mv(), "center_of"); }

double angle_between(const Circle& c1, const Circle& c2) {
  const Magnitude m1 = magnitude(c1.mv());
  const Magnitude m2 = magnitude(c2.mv());
  if (m1.value == 0.0 || m2.value == 0.0)
    throw DegenerateObject("angle_between: degenerate circle");
  const double cosv = (c1.mv() | c2.mv()).scalar_part() / (m1.value * m2.value);
  return std::acos(std::clamp(cosv, -1.0, 1.0));
}

Sphere sphere_through(const ConformalPoint& x1, const ConformalPoint& x2,
                      const ConformalPoint& x3, const ConformalPoint& x4) {
  const Multivector m = ((x1.mv() ^ x2.mv()) ^ x3.mv()) ^ x4.mv();
  if (m.coeff_norm_inf() <
      kZeroTol * input_scale({&x1.mv(), &x2.mv(), &x3.mv(), &x4.mv()}))
    throw DegenerateObject("sphere_through: cocircular or coincident points");
  return Sphere(m);
}

Circle meet(const Sphere& s1, const Sphere& s2) {
  const Multivector m = dual(s1.mv()) | s2.mv();
  if (m.coeff_norm_inf() < kZeroTol * input_scale({&s1.mv(), &s2.mv()}))
    throw DegenerateObject("meet: spheres coincide");
  return Circle(m);
}

PointPair meet(const Circle& c, const Sphere& s) {
  const Multivector m = dual(c.mv()) | s.mv();
  if (m.coeff_norm_inf() < kZeroTol * input_scale({&c.mv(), &s.mv()}))
    throw DegenerateObject("meet: circle lies on the sphere");
  return PointPair(m);
}

SplitPoints split_point_pair(const PointPair& b) {
  const Multivector& biv = b.mv();
  const double scale2 = biv.coeff_norm_inf() * biv.coeff_norm_inf();
  const double b2 = b.square();
  if (b2 <= kZeroTol * scale2)
    throw NoRealPoints(b2 < -kZeroTol * scale2
                           ? "split_point_pair: no real points (B^2 < 0)"
                           : "split_point_pair: tangent point (B^2 ~ 0)");
  const double beta = std::sqrt(b2);

  // Probe vector: v = p.B factors as a combination of the two null points.
  // Pick the probe that keeps both factors well away from zero, judged by
  // |v^2| = 2 |p.X| |p.Y| |X.Y|.
  const Multivector probes[] = {infinity(),           nbar(),
                                Multivector::basis(4), Multivector::basis(1),
                                Multivector::basis(2), Multivector::basis(3),
                                Multivector::basis(0)};
  Multivector best_v;
  double best_v2 = 0.0;
  for (const Multivector& p : probes) {
    const Multivector v = p | biv;
    const double v2 = (v * v).scalar_part();
    if (std::fabs(v2) > std::fabs(best_v2)) {
      best_v2 = v2;
      best_v = v;
    }
  }
  if (std::fabs(best_v2) <= kZeroTol * scale2)
    throw DegenerateObject("split_point_pair: could not factor the bivector");

  const Multivector vinv = best_v / best_v2;
  auto half = [&](double sign_beta) {
    Multivector u = ((biv + Multivector::scalar(sign_beta * beta)) * vinv).grade_part(GradeIndex(1));
    if (u[1u << 0] < 0.0) u = -u;  // positive-e0 representative
    return u;
  };
  SplitPoints out{half(-1.0), half(+1.0)};
  if (out.first.coeff_norm_inf() == 0.0 || out.second.coeff_norm_inf() == 0.0)
    throw NoRealPoints("split_point_pair: factorization collapsed");
  return out;
}

Sphere bisector_plane(const ConformalPoint& x1, const ConformalPoint& x2) {
  const Multivector w = (x1.mv() ^ x2.mv()) | infinity();
  if (w.coeff_norm_inf() < kZeroTol * input_scale({&x1.mv(), &x2.mv()}))
    throw DegenerateObject("bisector_plane: coincident points");
  return Sphere(dual(w));
}

PointPair oriented_meet_circle_plane(const Circle& c, const Sphere& plane) {
  const Multivector m =
      dual(c.mv() * plane.mv() + plane.mv() * c.mv()).grade_part(GradeIndex(2));
  if (m.coeff_norm_inf() < kZeroTol * input_scale({&c.mv(), &plane.mv()}))
    throw DegenerateObject("oriented_meet_circle_plane: circle lies in the plane");
  return PointPair(m);
}

Euclidean3 line_direction(const Multivector& line) {
  if (!is_flat_mv(line, "line_direction")) throw InfiniteRadius("line_direction: not a line");
  // For L = P ^ Q ^ n the e0.e_i.e4 components carry the traversal direction
  // q - p (positive scale).
  constexpr unsigned kE0 = 1u << 0, kE4 = 1u << 4;
  const Euclidean3 d{line[kE0 | (1u << 1) | kE4], line[kE0 | (1u << 2) | kE4],
                     line[kE0 | (1u << 3) | kE4]};
  if (d.norm2() == 0.0) throw DegenerateObject("line_direction: degenerate line");
  return d.normalized();
}

Euclidean3 line_direction(const Circle& line) { return line_direction(line.mv()); }

namespace {

Multivector normalized_round(const Multivector& m, int* sign_out, const char* what) {
  const Magnitude mag = magnitude(m);
  if (mag.value <= kZeroTol * m.coeff_norm_inf() || mag.sign == 0)
    throw DegenerateObject(std::string(what) + ": null magnitude");
  if (sign_out != nullptr) *sign_out = mag.sign;
  return m / mag.value;
}

}  // namespace

Circle normalized(const Circle& c, int* sign_out) {
  return Circle(normalized_round(c.mv(), sign_out, "normalized(circle)"));
}

Sphere normalized(const Sphere& s, int* sign_out) {
  return Sphere(normalized_round(s.mv(), sign_out, "normalized(sphere)"));
}

}  // namespace cgablend
