#include "cgablend/circle_blend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cgablend/errors.hpp"

namespace cgablend {

namespace {

constexpr double kSmallAngle = 1e-5;   // below this the sine blend goes linear
constexpr double kOppositeTol = 1e-10; // R R~ threshold for anti-parallel objects
constexpr double kAlphaTol = 1e-9;     // relative alpha threshold (border case)

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_unit_interval(double lambda, const char* what) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error(std::string(what) + ": lambda must lie in [0,1]");
}

}  // namespace

BlendProfile BlendProfile::geometric(int order) {
  if (order < 1) throw std::invalid_argument("BlendProfile: order must be >= 1");
  return BlendProfile(order);
}

double BlendProfile::operator()(double lambda) const {
  check_unit_interval(lambda, "BlendProfile");
  if (order_ == 1) return lambda;
  // Smoothstep of degree 2k-1:
  //   p(x) = x^k * sum_{i=0}^{k-1} C(k-1+i, i) C(2k-1, k-1-i) (-x)^i
  const int k = order_;
  double sum = 0.0;
  double xpow = 1.0;
  for (int i = 0; i < k; ++i) {
    sum += binomial(k - 1 + i, i) * binomial(2 * k - 1, k - 1 - i) * xpow;
    xpow *= -lambda;
  }
  return std::pow(lambda, k) * sum;
}

ConformalPoint arc_midpoint(const Circle& c, const ConformalPoint& x1,
                            const ConformalPoint& x2) {
  const Sphere plane = bisector_plane(x1, x2);
  const PointPair crossing = oriented_meet_circle_plane(c, plane);
  return ConformalPoint(split_point_pair(crossing).first);
}

Circle mid_circle(const Circle& c1, const Circle& c2, const ConformalPoint& x1,
                  const ConformalPoint& x2) {
  int sign1 = 0, sign2 = 0;
  const Circle c1n = normalized(c1, &sign1);
  const Circle c2n = normalized(c2, &sign2);
  if (sign1 != sign2)
    throw DegenerateObject("mid_circle: circle magnitude signs disagree");

  const Multivector sum = c1n.mv() + c2n.mv();
  if (sum.coeff_norm_inf() < 1e-9 * c1n.mv().coeff_norm_inf())
    throw PathologicalConfiguration(
        "mid_circle: equal and opposite circles (theta = pi)");

  const ConformalPoint m1 = arc_midpoint(c1n, x1, x2);
  const ConformalPoint m2 = arc_midpoint(c2n, x1, x2);
  const Sphere plane = bisector_plane(x1, x2);
  const PointPair crossing = oriented_meet_circle_plane(Circle(sum), plane);

  const double m1n = (m1.mv() | infinity()).scalar_part();
  const double m2n = (m2.mv() | infinity()).scalar_part();
  const Multivector mean = m1n * m2.mv() + m2n * m1.mv();
  const Multivector probe = mean ^ infinity();
  const double alpha = (probe | crossing.mv()).scalar_part();
  if (std::fabs(alpha) <= kAlphaTol * probe.coeff_norm() * crossing.mv().coeff_norm())
    throw PathologicalConfiguration("mid_circle: alpha = 0 border case");

  return Circle(alpha < 0 ? sum : -sum);
}

Segment make_segment(const ConformalPoint& x1, const ConformalPoint& x2,
                     const Circle& incoming, const Circle& outgoing) {
  int sign1 = 0, sign2 = 0;
  const Circle c1 = normalized(incoming, &sign1);
  const Circle c2 = normalized(outgoing, &sign2);
  if (sign1 != sign2)
    throw DegenerateObject("make_segment: circle magnitude signs disagree");

  const Circle mid = normalized(mid_circle(c1, c2, x1, x2));
  const double half_cos = std::clamp((c1.mv() | mid.mv()).scalar_part(), -1.0, 1.0);
  const double theta = 2.0 * std::acos(half_cos);
  const Circle chord = normalized(line_through(x1, x2));
  return Segment{x1, x2, c1, c2, mid, chord, theta};
}

Circle circle_slerp(const Segment& seg, const BlendProfile& profile, double lambda) {
  check_unit_interval(lambda, "circle_slerp");
  const double t = profile(lambda);
  const double theta = seg.theta;
  if (theta < kSmallAngle)
    return Circle((1.0 - t) * seg.c1.mv() + t * seg.c2.mv());
  return Circle((std::sin((1.0 - t) * theta) * seg.c1.mv() +
                 std::sin(t * theta) * seg.c2.mv()) /
                std::sin(theta));
}

ConformalPoint chord_point(const ConformalPoint& x1, const ConformalPoint& x2,
                           double lambda) {
  check_unit_interval(lambda, "chord_point");
  const Multivector& n = infinity();
  const double x1n = (x1.mv() | n).scalar_part();
  const double x2n = (x2.mv() | n).scalar_part();
  const double x1x2 = (x1.mv() | x2.mv()).scalar_part();
  return ConformalPoint(-(1.0 - lambda) * x2n * x1.mv() - lambda * x1n * x2.mv() +
                        lambda * (1.0 - lambda) * x1x2 * n);
}

Rotor segment_rotor(const Circle& blend, const Circle& chord) {
  const Multivector r = Multivector::scalar(1.0) + blend.mv() * chord.mv();
  const double n2 = (r * reverse(r)).scalar_part();
  if (n2 <= kOppositeTol)
    throw OppositeObjects("segment_rotor: blend circle anti-parallel to the chord");
  return Rotor(r).normalized();
}

ConformalPoint evaluate_segment(const Segment& seg, const BlendProfile& profile,
                                double lambda) {
  const Circle blend = normalized(circle_slerp(seg, profile, lambda));
  const Rotor r = segment_rotor(blend, seg.chord);
  const ConformalPoint y = chord_point(seg.x1, seg.x2, lambda);
  return ConformalPoint(r.apply(y.mv()).grade_part(GradeIndex(1)));
}

Multivector pathological_generator(const ConformalPoint& x1, const ConformalPoint& x2,
                                   const Sphere& plane) {
  if (!is_flat(plane))
    throw DegenerateObject("pathological_generator: plane must be flat");
  const Multivector g = (x1.mv() ^ x2.mv()) * plane.mv();
  if (!g.pure_grade(2, 1e-9))
    throw std::invalid_argument(
        "pathological_generator: points do not lie in the plane");
  return g.grade_part(GradeIndex(2));
}

namespace {

void validate_spec(const SplineSpec& spec) {
  const std::size_t n = spec.control_points.size();
  if (spec.samples_per_segment < 1)
    throw std::invalid_argument("spline: samples_per_segment must be >= 1");
  if (spec.refine_depth < 0)
    throw std::invalid_argument("spline: refine_depth must be >= 0");
  if (spec.closed ? n < 3 : n < 4)
    throw std::invalid_argument(spec.closed
                                    ? "spline: closed splines need at least 3 points"
                                    : "spline: open splines need at least 4 points");
  double scale = 0.0;
  for (const Euclidean3& p : spec.control_points)
    scale = std::max({scale, std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});
  const double tol = 1e-12 * std::max(1.0, scale);
  const std::size_t pairs = spec.closed ? n : n - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Euclidean3 d =
        spec.control_points[(i + 1) % n] - spec.control_points[i];
    if (d.norm() <= tol)
      throw std::invalid_argument("spline: consecutive control points coincide");
  }
}

Segment indexed_segment(const ConformalPoint& a, const ConformalPoint& b,
                        const Circle& c1, const Circle& c2, int index) {
  try {
    return make_segment(a, b, c1, c2);
  } catch (const PathologicalConfiguration& e) {
    throw PathologicalConfiguration(
        "segment " + std::to_string(index) + ": " + e.what(), index);
  }
}

}  // namespace

std::vector<Segment> spline_segments(const SplineSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.control_points.size();
  std::vector<ConformalPoint> pts;
  pts.reserve(n);
  for (const Euclidean3& p : spec.control_points) pts.push_back(embed_point(p));

  std::vector<Segment> segments;
  if (spec.closed) {
    std::vector<Circle> circles;
    circles.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      circles.push_back(circle_through(pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]));
    for (std::size_t i = 0; i < n; ++i)
      segments.push_back(indexed_segment(pts[i], pts[(i + 1) % n], circles[i],
                                         circles[(i + 1) % n], static_cast<int>(i)));
  } else {
    std::vector<Circle> circles;  // through-circles at interior points 1..n-2
    circles.reserve(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i)
      circles.push_back(circle_through(pts[i - 1], pts[i], pts[i + 1]));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Circle& before = circles[i == 0 ? 0 : i - 1];
      const Circle& after = circles[std::min(i, n - 3)];
      segments.push_back(
          indexed_segment(pts[i], pts[i + 1], before, after, static_cast<int>(i)));
    }
  }
  return segments;
}

std::vector<CurveSample> build_spline(const SplineSpec& spec) {
  const SplineSpec refined = spec.refine_depth > 0 ? refine_midpoints(spec) : spec;
  const std::vector<Segment> segments = spline_segments(refined);
  const int s = refined.samples_per_segment;

  std::vector<CurveSample> out;
  out.reserve(segments.size() * s + 1);
  for (std::size_t j = 0; j < segments.size(); ++j)
    for (int k = 0; k < s; ++k) {
      const double lambda = static_cast<double>(k) / s;
      out.push_back({static_cast<int>(j), lambda,
                     extract_point(evaluate_segment(segments[j], refined.profile, lambda))});
    }
  if (!refined.closed) {
    const std::size_t last = segments.size() - 1;
    out.push_back({static_cast<int>(last), 1.0,
                   extract_point(evaluate_segment(segments[last], refined.profile, 1.0))});
  }
  return out;
}

SplineSpec refine_midpoints(const SplineSpec& spec) {
  SplineSpec current = spec;
  current.refine_depth = 0;
  for (int pass = 0; pass < spec.refine_depth; ++pass) {
    const std::vector<Segment> segments = spline_segments(current);
    std::vector<Euclidean3> refined;
    refined.reserve(2 * current.control_points.size());
    for (std::size_t j = 0; j < segments.size(); ++j) {
      refined.push_back(current.control_points[j]);
      refined.push_back(
          extract_point(evaluate_segment(segments[j], current.profile, 0.5)));
    }
    if (!current.closed) refined.push_back(current.control_points.back());
    current.control_points = std::move(refined);
  }
  return current;
}

}  // namespace cgablend
