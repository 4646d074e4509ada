#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "aim/rational.hpp"

namespace aim::algebra {

/// Dense univariate polynomial with exact rational coefficients, stored
/// lowest power first. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  QPoly(long c) : QPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const Rational& c, unsigned degree);
  /// The polynomial x.
  static QPoly x();

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(); }
  const Rational& leading() const { return c_.back(); }

  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const noexcept;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  QPoly derivative() const;
  QPoly monic() const;
  /// Integer coefficients with unit content and positive leading coefficient.
  QPoly primitive() const;
  /// Gcd of the coefficients (positive), zero for the zero polynomial.
  Rational content() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  friend QPoly operator*(long s, QPoly a) { return a *= Rational(s); }
  friend QPoly operator*(QPoly a, long s) { return a *= Rational(s); }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Multiplies by x^k.
  QPoly shifted(unsigned k) const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division over Q; throws InvalidArgument when dividing by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// a / b when b divides a exactly; throws InvalidArgument otherwise.
QPoly exact_div(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Square-free decomposition: returns (s_1, s_2, ...) with p = c * prod s_i^i.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace aim::algebra
