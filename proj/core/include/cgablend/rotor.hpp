#pragma once

#include "cgablend/multivector.hpp"

namespace cgablend {

/// Even-grade multivector R with positive scalar R R~, applied to geometry by
/// sandwiching: A -> R A R~.  Construction validates the rotor conditions;
/// the norm is allowed to be any positive scalar (homogeneous model).
class Rotor {
 public:
  /// Validates: even grades only, R R~ scalar within tolerance, R R~ > 0.
  /// Throws InvalidRotor otherwise.
  explicit Rotor(const Multivector& m);

  const Multivector& mv() const { return mv_; }

  /// Scalar part of R R~.
  double norm_squared() const { return norm2_; }

  /// R / sqrt(R R~).
  Rotor normalized() const;

  /// R a R~.
  Multivector apply(const Multivector& a) const;

 private:
  Rotor(Multivector m, double norm2, int /*trusted*/) : mv_(std::move(m)), norm2_(norm2) {}

  Multivector mv_;
  double norm2_;
};

inline Multivector apply_rotor(const Rotor& r, const Multivector& a) { return r.apply(a); }

/// Power-series exponential of a pure bivector, evaluated with scaling and
/// squaring (64-term cap, 1e-15 term-norm tolerance).  exp(0) = 1.  Throws
/// NonConvergence if the series fails to settle, std::invalid_argument if the
/// generator is not a pure bivector.
Rotor exp_bivector(const Multivector& b);

}  // namespace cgablend
