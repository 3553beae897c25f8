#pragma once

#include <vector>

#include "cgablend/primitives.hpp"

namespace cgablend {

// The spline engine.  Between two control points the curve is produced by
// rotating the straight chord onto a circle interpolated between the two
// through-circles; the interpolation is an angle blend of the normalized
// circle trivectors, with the blend parameter reshaped by a continuity
// profile.

/// Parameter reshaping p(lambda) controlling the junction continuity order.
/// Order k uses the smoothstep polynomial of degree 2k-1, whose first k-1
/// derivatives vanish at both ends (order 1 is the identity).
class BlendProfile {
 public:
  static BlendProfile geometric(int order);
  int order() const { return order_; }
  /// p(lambda); throws std::domain_error outside [0,1].
  double operator()(double lambda) const;

 private:
  explicit BlendProfile(int order) : order_(order) {}
  int order_;
};

inline double blend_profile_eval(const BlendProfile& p, double lambda) { return p(lambda); }

/// One blending span between two shared points.  c1/c2/mid/chord are stored
/// unit-magnitude; theta is the blend angle resolved by the mid-circle test
/// (it exceeds pi when the circles are more than 180 degrees apart).
struct Segment {
  ConformalPoint x1, x2;
  Circle c1, c2;
  Circle mid;
  Circle chord;
  double theta;
};

/// Builds a segment from the incoming and outgoing through-circles.  Both
/// circles must pass through x1 and x2.  Throws PathologicalConfiguration for
/// the equal-and-opposite (theta = pi) case and the alpha = 0 border case,
/// DegenerateObject when the circle magnitude signs disagree.
Segment make_segment(const ConformalPoint& x1, const ConformalPoint& x2,
                     const Circle& incoming, const Circle& outgoing);

/// Orientation-resolved mid-circle +-(C1_hat + C2_hat).  The sign is chosen
/// by intersecting the candidate with the bisector plane of x1, x2 and
/// testing which intersection point lies nearer the arc midpoints.
Circle mid_circle(const Circle& c1, const Circle& c2, const ConformalPoint& x1,
                  const ConformalPoint& x2);

/// Midpoint of the arc of c that runs from x1 to x2 along c's orientation.
ConformalPoint arc_midpoint(const Circle& c, const ConformalPoint& x1,
                            const ConformalPoint& x2);

/// Angle-interpolated circle at profile-mapped parameter lambda; falls back
/// to the linear blend below theta = 1e-5 where the sine quotient loses
/// accuracy.
Circle circle_slerp(const Segment& seg, const BlendProfile& profile, double lambda);

/// Null point on the straight chord:
/// Y(l) = -(1-l)(X2.n) X1 - l (X1.n) X2 + l(1-l)(X1.X2) n.
ConformalPoint chord_point(const ConformalPoint& x1, const ConformalPoint& x2,
                           double lambda);

/// Rotor R = 1 + C L carrying the chord line onto the blend circle (both
/// unit-magnitude), normalized.  Throws OppositeObjects when R R~ ~ 0.
Rotor segment_rotor(const Circle& blend, const Circle& chord);

/// Curve point X(lambda) = R Y(lambda) R~.
ConformalPoint evaluate_segment(const Segment& seg, const BlendProfile& profile,
                                double lambda);

/// Bivector generator (X1 ^ X2) P for the planar theta = pi configuration;
/// its exponential fixes x1 and x2 and preserves the plane.  Requires a flat
/// plane containing both points.
Multivector pathological_generator(const ConformalPoint& x1, const ConformalPoint& x2,
                                   const Sphere& plane);

struct SplineSpec {
  std::vector<Euclidean3> control_points;
  bool closed = false;
  BlendProfile profile = BlendProfile::geometric(2);
  int samples_per_segment = 64;
  int refine_depth = 0;
};

struct CurveSample {
  int segment;
  double lambda;
  Euclidean3 point;
};

/// Through-circles and segments for the control polygon (after validation;
/// no refinement applied).  Open splines blend the first and last spans with
/// their single defined circle, giving pure end arcs.
std::vector<Segment> spline_segments(const SplineSpec& spec);

/// Samples the spline at uniform lambda.  Each segment contributes
/// samples_per_segment points at lambda = k/S (k = 0..S-1); open splines
/// append the final control point, so junctions are emitted exactly once.
/// Honors refine_depth before sampling.
std::vector<CurveSample> build_spline(const SplineSpec& spec);

/// Inserts the blended midpoint of every segment as a new control point,
/// refine_depth times; the returned spec has refine_depth = 0.
SplineSpec refine_midpoints(const SplineSpec& spec);

}  // namespace cgablend
