#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aim/qpoly.hpp"

namespace aim::algebra {

/// Polynomial in the reduced coordinate z and the energy E with exact
/// coefficients. Stored dense in E: entry j is the z-polynomial multiplying
/// E^j. No zero terms are kept and trailing zero E-slices are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  /// Lifts a z-only polynomial.
  explicit BiPoly(QPoly z_poly);
  /// Takes ownership of the E-slices (index = power of E).
  explicit BiPoly(std::vector<QPoly> e_slices);

  static BiPoly z();
  static BiPoly E();
  static BiPoly term(const Rational& c, unsigned deg_z, unsigned deg_e);

  bool is_zero() const noexcept { return e_.empty(); }
  int deg_e() const noexcept { return static_cast<int>(e_.size()) - 1; }
  int deg_z() const noexcept;
  std::size_t term_count() const noexcept;

  const std::vector<QPoly>& e_slices() const noexcept { return e_; }
  /// Coefficient polynomial in z of E^j.
  const QPoly& e_coeff(unsigned j) const;
  Rational coeff(unsigned deg_z, unsigned deg_e) const;

  /// Formal partial derivative with respect to z.
  BiPoly derive_z() const;
  /// Substitutes z = z0, leaving a polynomial in E.
  QPoly eval_z(const Rational& z0) const;
  /// Substitutes E = e0 (floating point), leaving real coefficients in z,
  /// lowest power first.
  std::vector<double> eval_e(double e0) const;
  double eval(double z, double e) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(long s, BiPoly a) { return a *= Rational(s); }
  friend BiPoly operator*(BiPoly a, long s) { return a *= Rational(s); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.e_ == b.e_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<QPoly> e_;
};

/// Multiplies every E-slice by a z-only polynomial.
BiPoly operator*(const BiPoly& a, const QPoly& z_poly);
BiPoly operator*(const QPoly& z_poly, const BiPoly& a);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace aim::algebra
