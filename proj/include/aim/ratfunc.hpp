#pragma once

#include <iosfwd>
#include <string>

#include "aim/bipoly.hpp"

namespace aim::algebra {

/// Ratio of a (z, E) polynomial to a z-only polynomial.
///
/// Canonical form, maintained by every constructor and operation:
///   - the denominator is E-free and nonzero (enforced by its type),
///   - numerator and denominator share no factor in z (for an E-free
///     denominator this is the same as being fully reduced),
///   - all coefficients are integers with unit overall content,
///   - the leading coefficient of the denominator is positive.
/// The zero function is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : RatFunc(BiPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(BiPoly num);  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument when den is the zero polynomial.
  RatFunc(BiPoly num, QPoly den);

  const BiPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  BiPoly den_bipoly() const { return BiPoly(den_); }

  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Quotient rule, result canonical.
  RatFunc derive_z() const;
  /// The canonical numerator with z = z0 substituted, as a polynomial in E.
  /// The denominator is not consulted, so z0 may sit on a pole.
  QPoly eval_numer_at(const Rational& z0) const;
  double eval(double z, double e) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-applies canonicalization; a no-op on any value of this type.
  RatFunc canonicalized() const { return RatFunc(num_, den_); }

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, BiPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  BiPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace aim::algebra
