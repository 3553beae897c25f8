#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace cgablend {

// Dense multivector arithmetic for the conformal algebra G(4,1).
//
// The five basis vectors e0..e4 carry the metric diag(-1,+1,+1,+1,+1).  A
// basis blade is indexed by the bitmask of the vectors it contains (bit i set
// means e_i is a factor), with factors ordered by ascending index.  Blade
// products reduce to a sign lookup plus a bitmask xor, so the whole algebra
// is driven by one precomputed 32x32 sign table.

inline constexpr int kBladeCount = 32;
inline constexpr int kMaxGrade = 5;

namespace detail {

/// Sign of the permutation that merges two ascending blades into one
/// ascending factor sequence (counts basis-vector transpositions).
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Geometric-product sign between two basis blades, metric included.
/// Only e0 squares to -1.
constexpr int product_sign(unsigned a, unsigned b) {
  int s = reorder_sign(a, b);
  if ((a & b & 1u) != 0) s = -s;
  return s;
}

struct SignTable {
  std::int8_t s[kBladeCount][kBladeCount]{};
};

constexpr SignTable make_sign_table() {
  SignTable t;
  for (unsigned i = 0; i < kBladeCount; ++i)
    for (unsigned j = 0; j < kBladeCount; ++j)
      t.s[i][j] = static_cast<std::int8_t>(product_sign(i, j));
  return t;
}

inline constexpr SignTable kSigns = make_sign_table();

constexpr int blade_grade(unsigned mask) { return std::popcount(mask); }

/// Reversion sign per grade: (+,+,-,-,+,+) for grades 0..5.
constexpr int reverse_sign(int grade) {
  return ((grade * (grade - 1) / 2) % 2 != 0) ? -1 : 1;
}

}  // namespace detail

/// Grade selector; construction rejects values outside 0..5.
class GradeIndex {
 public:
  explicit GradeIndex(int value);
  int value() const { return value_; }

 private:
  int value_;
};

class Multivector {
 public:
  /// Zero element.
  Multivector() = default;

  static Multivector scalar(double value);
  /// Single basis blade, e.g. blade(0b00111) = e0^e1^e2.
  static Multivector blade(unsigned mask, double coeff = 1.0);
  /// Basis vector e_i, i in 0..4.
  static Multivector basis(int i);
  /// I = e0 e1 e2 e3 e4.
  static Multivector pseudoscalar();

  double operator[](unsigned mask) const;
  void set(unsigned mask, double value);

  double scalar_part() const { return c_[0]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);
  Multivector operator-() const;

  /// Euclidean norm of the raw coefficient vector (metric-blind).
  double coeff_norm() const;
  /// Largest |coefficient| (metric-blind).
  double coeff_norm_inf() const;

  bool is_zero(double abs_tol = 0.0) const;

  Multivector grade_part(GradeIndex k) const;
  Multivector even_part() const;
  Multivector odd_part() const;

  /// Grade carrying the largest |coefficient|; 0 for the zero multivector.
  int dominant_grade() const;
  /// True when every coefficient outside grade k is at most rel_tol times
  /// the largest coefficient overall.
  bool pure_grade(int k, double rel_tol) const;

  const std::array<double, kBladeCount>& coeffs() const { return c_; }

  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator^(const Multivector& a, const Multivector& b);
  friend Multivector operator|(const Multivector& a, const Multivector& b);
  friend Multivector reverse(const Multivector& a);

 private:
  std::array<double, kBladeCount> c_{};
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator/(Multivector a, double s);

/// Geometric product.
Multivector operator*(const Multivector& a, const Multivector& b);
/// Outer product: the grade r+s part of each homogeneous pair.
Multivector operator^(const Multivector& a, const Multivector& b);
/// Inner product: the grade |r-s| part of each homogeneous pair.
Multivector operator|(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);
/// Duality map a -> I a.
Multivector dual(const Multivector& a);
Multivector grade_project(const Multivector& a, GradeIndex k);

struct Magnitude {
  double value;  ///< sqrt(|<a a~>_0|)
  int sign;      ///< sign of <a a~>_0: -1, 0, or +1
};

/// Magnitude of a homogeneous multivector.  The sign of <a a~>_0 is reported
/// separately; callers that need a consistent orientation convention assert
/// on it rather than assuming one.  Throws std::invalid_argument on
/// mixed-grade input.
Magnitude magnitude(const Multivector& a);

bool approx_equal(const Multivector& a, const Multivector& b, double abs_tol);

/// Human-readable form, e.g. "1 + 2 e01 - 0.5 e234".  Debugging aid.
std::string to_string(const Multivector& a);

}  // namespace cgablend
