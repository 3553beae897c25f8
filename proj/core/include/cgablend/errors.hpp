#pragma once

#include <stdexcept>
#include <string>

namespace cgablend {

/// Base class for geometric failure modes: degeneracies, unreachable
/// configurations, objects without the requested property.  Plain API misuse
/// (bad grade index, out-of-range parameter) throws the std exception types
/// instead.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PointAtInfinity : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NonNullVector : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Coincident generators, vanishing blades, apex on the circumcircle, and
/// similar "the object does not exist" cases.
class DegenerateObject : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NoRealPoints : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InfiniteRadius : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Blend circle (or sphere) anti-parallel to the chord object: the rotor
/// 1 + C L degenerates to zero.
class OppositeObjects : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class InvalidRotor : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NonConvergence : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The theta = pi configuration (equal and opposite circles) and the
/// alpha = 0 border case of the mid-circle test.
class PathologicalConfiguration : public GeometryError {
 public:
  explicit PathologicalConfiguration(const std::string& what, int segment = -1)
      : GeometryError(what), segment_index(segment) {}

  /// Index of the offending spline segment, or -1 when not segment-bound.
  int segment_index;
};

}  // namespace cgablend
