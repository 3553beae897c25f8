#include "cgablend/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cgablend {

GradeIndex::GradeIndex(int value) : value_(value) {
  if (value < 0 || value > kMaxGrade)
    throw std::out_of_range("GradeIndex: grade must lie in 0..5");
}

Multivector Multivector::scalar(double value) {
  Multivector m;
  m.c_[0] = value;
  return m;
}

Multivector Multivector::blade(unsigned mask, double coeff) {
  if (mask >= kBladeCount) throw std::out_of_range("Multivector::blade: bad mask");
  Multivector m;
  m.c_[mask] = coeff;
  return m;
}

Multivector Multivector::basis(int i) {
  if (i < 0 || i > 4) throw std::out_of_range("Multivector::basis: index must lie in 0..4");
  return blade(1u << i);
}

Multivector Multivector::pseudoscalar() { return blade(kBladeCount - 1); }

double Multivector::operator[](unsigned mask) const {
  if (mask >= kBladeCount) throw std::out_of_range("Multivector: bad blade mask");
  return c_[mask];
}

void Multivector::set(unsigned mask, double value) {
  if (mask >= kBladeCount) throw std::out_of_range("Multivector: bad blade mask");
  c_[mask] = value;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) { return (*this) *= 1.0 / s; }

Multivector Multivector::operator-() const {
  Multivector m = *this;
  for (double& v : m.c_) v = -v;
  return m;
}

double Multivector::coeff_norm() const {
  double q = 0;
  for (double v : c_) q += v * v;
  return std::sqrt(q);
}

double Multivector::coeff_norm_inf() const {
  double m = 0;
  for (double v : c_) m = std::max(m, std::fabs(v));
  return m;
}

bool Multivector::is_zero(double abs_tol) const { return coeff_norm_inf() <= abs_tol; }

Multivector Multivector::grade_part(GradeIndex k) const {
  Multivector m;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (detail::blade_grade(i) == k.value()) m.c_[i] = c_[i];
  return m;
}

Multivector Multivector::even_part() const {
  Multivector m;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (detail::blade_grade(i) % 2 == 0) m.c_[i] = c_[i];
  return m;
}

Multivector Multivector::odd_part() const {
  Multivector m;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (detail::blade_grade(i) % 2 != 0) m.c_[i] = c_[i];
  return m;
}

int Multivector::dominant_grade() const {
  int g = 0;
  double best = -1;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    double v = std::fabs(c_[i]);
    if (v > best) {
      best = v;
      g = detail::blade_grade(i);
    }
  }
  return g;
}

bool Multivector::pure_grade(int k, double rel_tol) const {
  double scale = coeff_norm_inf();
  if (scale == 0) return true;
  double off = 0;
  for (unsigned i = 0; i < kBladeCount; ++i)
    if (detail::blade_grade(i) != k) off = std::max(off, std::fabs(c_[i]));
  return off <= rel_tol * scale;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator/(Multivector a, double s) { return a /= s; }

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const double bj = b.c_[j];
      if (bj == 0.0) continue;
      r.c_[i ^ j] += detail::kSigns.s[i][j] * ai * bj;
    }
  }
  return r;
}

Multivector operator^(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      if ((i & j) != 0) continue;  // grade-raising terms only
      const double bj = b.c_[j];
      if (bj == 0.0) continue;
      r.c_[i ^ j] += detail::kSigns.s[i][j] * ai * bj;
    }
  }
  return r;
}

Multivector operator|(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    const int gi = detail::blade_grade(i);
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const double bj = b.c_[j];
      if (bj == 0.0) continue;
      const int gj = detail::blade_grade(j);
      if (detail::blade_grade(i ^ j) != std::abs(gi - gj)) continue;
      r.c_[i ^ j] += detail::kSigns.s[i][j] * ai * bj;
    }
  }
  return r;
}

Multivector reverse(const Multivector& a) {
  Multivector r;
  for (unsigned i = 0; i < kBladeCount; ++i)
    r.c_[i] = detail::reverse_sign(detail::blade_grade(i)) * a.c_[i];
  return r;
}

Multivector dual(const Multivector& a) { return Multivector::pseudoscalar() * a; }

Multivector grade_project(const Multivector& a, GradeIndex k) { return a.grade_part(k); }

Magnitude magnitude(const Multivector& a) {
  const int g = a.dominant_grade();
  if (!a.pure_grade(g, 1e-9))
    throw std::invalid_argument("magnitude: input is not homogeneous in grade");
  const double q = (a * reverse(a)).scalar_part();
  const int sign = (q > 0.0) - (q < 0.0);
  return {std::sqrt(std::fabs(q)), sign};
}

bool approx_equal(const Multivector& a, const Multivector& b, double abs_tol) {
  return (a - b).coeff_norm_inf() <= abs_tol;
}

std::string to_string(const Multivector& a) {
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const double v = a[i];
    if (v == 0.0) continue;
    if (!first) out << (v < 0 ? " - " : " + ");
    else if (v < 0) out << "-";
    out << std::fabs(v);
    if (i != 0) {
      out << " e";
      for (int bit = 0; bit <= 4; ++bit)
        if (i & (1u << bit)) out << bit;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace cgablend
