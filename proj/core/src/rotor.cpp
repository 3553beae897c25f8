#include "cgablend/rotor.hpp"

#include <cmath>
#include <stdexcept>

#include "cgablend/errors.hpp"

namespace cgablend {

namespace {
constexpr double kRelTol = 1e-9;
}

Rotor::Rotor(const Multivector& m) : mv_(m) {
  const double scale = m.coeff_norm_inf();
  if (scale == 0.0) throw InvalidRotor("rotor: zero multivector");
  if (m.odd_part().coeff_norm_inf() > kRelTol * scale)
    throw InvalidRotor("rotor: odd-grade content");
  const Multivector e = m * reverse(m);
  norm2_ = e.scalar_part();
  const double residual = (e - Multivector::scalar(norm2_)).coeff_norm_inf();
  if (residual > kRelTol * std::max(std::fabs(norm2_), scale * scale))
    throw InvalidRotor("rotor: R R~ has non-scalar part");
  if (norm2_ <= 0.0) throw InvalidRotor("rotor: R R~ must be a positive scalar");
}

Rotor Rotor::normalized() const { return Rotor(mv_ / std::sqrt(norm2_), 1.0, 0); }

Multivector Rotor::apply(const Multivector& a) const { return mv_ * a * reverse(mv_); }

Rotor exp_bivector(const Multivector& b) {
  if (!b.pure_grade(2, 1e-9))
    throw std::invalid_argument("exp_bivector: generator must be a pure bivector");

  // Scale the generator under 1/2 so the Taylor series converges fast, then
  // square the result back up.
  Multivector x = b;
  int squarings = 0;
  double scale = x.coeff_norm_inf();
  while (scale > 0.5) {
    x *= 0.5;
    scale *= 0.5;
    if (++squarings > 64) throw NonConvergence("exp_bivector: generator is ill-scaled");
  }

  Multivector sum = Multivector::scalar(1.0);
  Multivector term = Multivector::scalar(1.0);
  bool converged = false;
  for (int k = 1; k <= 64; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
    if (term.coeff_norm_inf() < 1e-15) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NonConvergence("exp_bivector: series did not converge in 64 terms");

  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return Rotor(sum);
}

}  // namespace cgablend
