#pragma once

#include <vector>

#include "aim/qpoly.hpp"

namespace aim::algebra {

/// Floating-point polynomial in E, index = power.
class UniPolyE {
 public:
  UniPolyE() = default;
  explicit UniPolyE(std::vector<double> coeffs);
  static UniPolyE from_exact(const QPoly& p);

  const std::vector<double>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  double eval(double x) const;
  double eval_derivative(double x) const;

 private:
  std::vector<double> c_;
};

inline constexpr double kDefaultImagTol = 1e-8;

/// Real roots (with multiplicity, ascending) from the eigenvalues of the
/// balanced companion matrix, each polished with Newton steps. A root is
/// accepted as real when |Im| <= imag_tol * (1 + |Re|).
/// Throws ZeroPolynomial or DegreeZero.
std::vector<double> poly_real_roots(const UniPolyE& p, double imag_tol = kDefaultImagTol);

/// Real roots of an exact polynomial (with multiplicity, ascending), isolated
/// with Sturm sequences on each square-free factor and refined by exact
/// bisection to full double precision. Immune to the ill-conditioning of
/// clustered high-degree roots that defeats the floating-point route.
/// Throws ZeroPolynomial or DegreeZero.
std::vector<double> real_roots_exact(const QPoly& p);

/// Number of distinct real roots of p in (a, b].
int sturm_count(const QPoly& p, const Rational& a, const Rational& b);

}  // namespace aim::algebra
