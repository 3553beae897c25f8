#pragma once

#include "cgablend/conformal.hpp"
#include "cgablend/multivector.hpp"

namespace cgablend {

// Round objects as graded multivectors: a bivector encodes a point pair, a
// trivector a circle (a line is a circle through infinity), a 4-vector a
// sphere (a plane is a sphere through infinity).  All representations are
// homogeneous: scale carries no geometry, sign carries orientation.

/// Grade-2 round object.  The sign of B^2 classifies the solution set: two
/// points when positive, one when zero, none when negative.
class PointPair {
 public:
  explicit PointPair(const Multivector& m);
  const Multivector& mv() const { return m_; }
  /// B^2 (a scalar for blades).
  double square() const;

 private:
  Multivector m_;
};

/// Grade-3 round object: circle, or line when flat.
class Circle {
 public:
  explicit Circle(const Multivector& m);
  const Multivector& mv() const { return m_; }

 private:
  Multivector m_;
};

/// Grade-4 round object: sphere, or plane when flat.
class Sphere {
 public:
  explicit Sphere(const Multivector& m);
  const Multivector& mv() const { return m_; }

 private:
  Multivector m_;
};

/// X1 ^ X2 ^ X3.  Collinear generators produce a line; coincident ones throw
/// DegenerateObject.
Circle circle_through(const ConformalPoint& x1, const ConformalPoint& x2,
                      const ConformalPoint& x3);

/// X1 ^ X2 ^ n.
Circle line_through(const ConformalPoint& x1, const ConformalPoint& x2);

/// A ^ n = 0 test, relative tolerance 1e-9.
bool is_flat(const Circle& c);
bool is_flat(const Sphere& s);

/// rho^2 = -L^2 / (L ^ n)^2.  Throws InfiniteRadius for lines.
double circle_radius(const Circle& c);
double sphere_radius(const Sphere& s);

/// Centre from the reflection L n L (respectively S n S).  Throws
/// PointAtInfinity for flat objects.
ConformalPoint center_of(const Circle& c);
ConformalPoint center_of(const Sphere& s);

/// cos(theta) = L1.L2 / (|L1| |L2|), clamped into [-1,1]; invariant under the
/// conformal group.
double angle_between(const Circle& c1, const Circle& c2);

/// X1 ^ X2 ^ X3 ^ X4.  Coplanar generators give a plane; cocircular or
/// coincident ones throw DegenerateObject.
Sphere sphere_through(const ConformalPoint& x1, const ConformalPoint& x2,
                      const ConformalPoint& x3, const ConformalPoint& x4);

/// Sphere/sphere intersection (I S1).S2; a circle, or a line for two planes.
Circle meet(const Sphere& s1, const Sphere& s2);

/// Circle/sphere intersection (I C).S; a point pair whose square classifies
/// the crossing (two, one, or no real points).
PointPair meet(const Circle& c, const Sphere& s);

struct SplitPoints {
  Multivector first;   ///< X_f: B = X_f ^ X_i with positive factor
  Multivector second;  ///< X_i
};

/// Factorizes a real point pair B (B^2 > 0) into its two null points,
/// ordered so that first ^ second is a positive multiple of B.  Either output
/// may be the point at infinity.  Throws NoRealPoints when B^2 <= 0.
SplitPoints split_point_pair(const PointPair& b);

/// Plane of points equidistant from X1 and X2: Pi = I ((X1 ^ X2).n).
/// Oriented with the normal pointing from X1 towards X2.
Sphere bisector_plane(const ConformalPoint& x1, const ConformalPoint& x2);

/// Oriented circle/plane intersection B = I (C Pi + Pi C).  When real,
/// split_point_pair gives (X_f, X_i) with X_f the point where the circle
/// crosses from the negative to the positive side of Pi.
PointPair oriented_meet_circle_plane(const Circle& c, const Sphere& plane);

/// Euclidean direction of a flat line, oriented along the line's traversal
/// (for L = P ^ Q ^ n this points from p to q).  Throws on non-flat input.
Euclidean3 line_direction(const Multivector& line);
Euclidean3 line_direction(const Circle& line);

/// A / sqrt(|<A A~>_0|).  Throws DegenerateObject when the magnitude
/// vanishes.  sign_out, when given, receives the sign of <A A~>_0.
Circle normalized(const Circle& c, int* sign_out = nullptr);
Sphere normalized(const Sphere& s, int* sign_out = nullptr);

}  // namespace cgablend
