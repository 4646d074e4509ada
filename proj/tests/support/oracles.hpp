#pragma once

// Test-side reference computations. Nothing here calls the library's own
// arithmetic beyond constructing values, so agreement is meaningful.

#include <cmath>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "aim/model.hpp"

namespace oracle {

using aim::algebra::BiPoly;
using aim::algebra::QPoly;
using aim::algebra::Rational;
using aim::algebra::RatFunc;

using Terms = std::map<std::pair<unsigned, unsigned>, Rational>;  // (deg_z, deg_E) -> coeff

inline Terms terms_of(const BiPoly& p) {
  Terms t;
  for (unsigned e = 0; e < p.e_slices().size(); ++e) {
    const auto& s = p.e_slices()[e];
    for (unsigned z = 0; z < s.coeffs().size(); ++z)
      if (!s.coeffs()[z].is_zero()) t[{z, e}] = s.coeffs()[z];
  }
  return t;
}

inline BiPoly from_terms(const Terms& t) {
  BiPoly p;
  for (const auto& [k, c] : t) p += BiPoly::term(c, k.first, k.second);
  return p;
}

inline Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : ++it;
  return out;
}

inline Terms derive_z(const Terms& a) {
  Terms out;
  for (const auto& [k, c] : a)
    if (k.first > 0) out[{k.first - 1, k.second}] = c * Rational(static_cast<long>(k.first));
  return out;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational rational(int span = 9, int max_den = 5) {
    return Rational(integer(-span, span), integer(1, max_den));
  }
  BiPoly bipoly(int max_z = 4, int max_e = 3, int terms = 6) {
    BiPoly p;
    const int n = integer(0, terms);
    for (int i = 0; i < n; ++i)
      p += BiPoly::term(rational(), integer(0, max_z), integer(0, max_e));
    return p;
  }
  QPoly zpoly(int max_deg = 2) {
    std::vector<Rational> c;
    for (int i = 0; i <= integer(0, max_deg); ++i) c.push_back(rational());
    QPoly p(c);
    return p.is_zero() ? QPoly(1) : p;
  }
};

// ---- Taylor-series check of the recursion ----------------------------------
// Around a regular point z*, with E fixed, expand the seed coefficients,
// integrate the first-order system for the two unit initial conditions and
// read off derivatives: phi1^(n+1)(z*) = a_n(z*) for phi = (1, 0) and
// = b_n(z*) for phi = (0, 1); likewise phi2^(n+1) gives d_n and c_n.

using Series = std::vector<Rational>;

inline Series taylor_of_poly(const QPoly& p, const Rational& at, int len) {
  // Coefficients of p(at + t): repeated synthetic division.
  std::vector<Rational> c = p.coeffs();
  Series out(len);
  for (int k = 0; k < len && !c.empty(); ++k) {
    Rational r = 0;
    std::vector<Rational> q(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      r = r * at + c[i];
      if (i > 0) q[i - 1] = r;
    }
    out[k] = r;
    c = q;
  }
  return out;
}

inline Series series_div(const Series& num, const Series& den) {
  Series q(num.size());
  for (std::size_t k = 0; k < num.size(); ++k) {
    Rational acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

inline Series series_of(const RatFunc& f, const Rational& z, const Rational& e, int len) {
  // num(z, e) as a polynomial in z: sum_j slice_j(z) e^j.
  QPoly nz;
  Rational ej = 1;
  for (const auto& slice : f.num().e_slices()) {
    nz += slice * ej;
    ej = ej * e;
  }
  return series_div(taylor_of_poly(nz, z, len), taylor_of_poly(f.den(), z, len));
}

struct RowValues {
  Rational a, b, c, d;
};

// Values of row n of the recursion at (z, e).
inline RowValues row_at(const aim::model::CoeffQuartet& q, int n, const Rational& z,
                        const Rational& e) {
  const int len = n + 3;
  const Series a0 = series_of(q.a0(), z, e, len), b0 = series_of(q.b0(), z, e, len),
               c0 = series_of(q.c0(), z, e, len), d0 = series_of(q.d0(), z, e, len);
  auto solve = [&](Rational p0, Rational q0) {
    Series p(len), r(len);
    p[0] = p0;
    r[0] = q0;
    for (int k = 0; k + 1 < len; ++k) {
      Rational sp = 0, sr = 0;
      for (int i = 0; i <= k; ++i) {
        sp += a0[i] * p[k - i] + b0[i] * r[k - i];
        sr += c0[i] * r[k - i] + d0[i] * p[k - i];
      }
      p[k + 1] = sp / Rational(k + 1);
      r[k + 1] = sr / Rational(k + 1);
    }
    return std::make_pair(p, r);
  };
  Rational fact = 1;
  for (int i = 2; i <= n + 1; ++i) fact = fact * Rational(i);
  auto [p1, r1] = solve(1, 0);
  auto [p2, r2] = solve(0, 1);
  return {p1[n + 1] * fact, p2[n + 1] * fact, r2[n + 1] * fact, r1[n + 1] * fact};
}

// ---- Closed-form spectra, written out independently --------------------------

inline std::vector<double> jc_lines(double k, double w, double w0, double kappa_sq, int n_max) {
  std::vector<double> out;
  for (int n = 1; n <= n_max; ++n) {
    const double rad = 4 * kappa_sq * (k + 2 - n) + (w + 2 * w0) * (w + 2 * w0);
    if (rad < 0) continue;
    const double c = (k + 1.5 - n) * w;
    out.push_back(c - 0.5 * std::sqrt(rad));
    out.push_back(c + 0.5 * std::sqrt(rad));
  }
  return out;
}

inline double nearest_distance(const std::vector<double>& xs, double v) {
  double best = INFINITY;
  for (double x : xs) best = std::min(best, std::abs(x - v));
  return best;
}

}  // namespace oracle
