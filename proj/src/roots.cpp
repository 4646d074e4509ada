#include "aim/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "aim/error.hpp"

namespace aim::algebra {

UniPolyE::UniPolyE(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

UniPolyE UniPolyE::from_exact(const QPoly& p) {
  std::vector<double> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.to_double());
  return UniPolyE(std::move(v));
}

double UniPolyE::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPolyE::eval_derivative(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * c_[i];
  return acc;
}

namespace {

void check_degree(int degree) {
  if (degree < 0) throw Error(ErrorCode::ZeroPolynomial, "polynomial is identically zero");
  if (degree == 0) throw Error(ErrorCode::DegreeZero, "nonzero constant polynomial has no roots");
}

// Parlett-Reinsch balancing with radix 2 (exact in floating point).
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<double> poly_real_roots(const UniPolyE& p, double imag_tol) {
  check_degree(p.degree());
  const auto& c = p.coeffs();
  const int n = p.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  balance(comp);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  const auto& ev = solver.eigenvalues();

  std::vector<double> roots;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double re = ev[i].real();
    if (std::abs(ev[i].imag()) > imag_tol * (1.0 + std::abs(re))) continue;
    double x = re;
    for (int step = 0; step < 4; ++step) {
      const double fx = p.eval(x);
      const double dfx = p.eval_derivative(x);
      if (fx == 0.0 || dfx == 0.0) break;
      const double next = x - fx / dfx;
      if (!std::isfinite(next) || std::abs(p.eval(next)) >= std::abs(fx)) break;
      x = next;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Sturm chain of a square-free polynomial. Each member is rescaled by a
// positive constant only, which preserves the sign pattern.
std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p.primitive(), p.derivative().primitive()};
  while (chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    r = -r;
    chain.push_back(r * (Rational(1) / r.content()));
  }
  return chain;
}

int sign_of(const Rational& r) { return r.sign(); }

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational cauchy_bound(const QPoly& p) {
  Rational m;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p.coeff(static_cast<unsigned>(i))) / lc;
    if (r > m) m = r;
  }
  // Round up to a power of two so every bisection point stays dyadic.
  Rational b(1);
  while (b <= m + Rational(1)) b *= Rational(2);
  return b;
}

double refine(const QPoly& p, Rational lo, Rational hi) {
  const int s_hi = sign_of(p.eval(hi));
  if (s_hi == 0) return hi.to_double();
  const Rational half(1, 2);
  for (;;) {
    const double scale = std::max(1.0, std::max(std::abs(lo.to_double()), std::abs(hi.to_double())));
    if ((hi - lo).to_double() <= 1e-16 * scale) break;
    Rational mid = (lo + hi) * half;
    const int s = sign_of(p.eval(mid));
    if (s == 0) return mid.to_double();
    if (s == s_hi) hi = mid;
    else lo = mid;
  }
  return ((lo + hi) * half).to_double();
}

void isolate(const QPoly& p, const std::vector<QPoly>& chain, const Rational& lo, int v_lo,
             const Rational& hi, int v_hi, std::vector<double>& out) {
  const int count = v_lo - v_hi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back(refine(p, lo, hi));
    return;
  }
  const Rational mid = (lo + hi) * Rational(1, 2);
  const int v_mid = variations_at(chain, mid);
  isolate(p, chain, lo, v_lo, mid, v_mid, out);
  isolate(p, chain, mid, v_mid, hi, v_hi, out);
}

std::vector<double> distinct_real_roots(const QPoly& squarefree) {
  const auto chain = sturm_chain(squarefree);
  const Rational b = cauchy_bound(squarefree);
  std::vector<double> out;
  isolate(squarefree, chain, -b, variations_at(chain, -b), b, variations_at(chain, b), out);
  return out;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
  check_degree(p.degree());
  const QPoly sf = exact_div(p, gcd(p, p.derivative()));
  if (sf.degree() <= 0) return 0;
  const auto chain = sturm_chain(sf);
  return variations_at(chain, a) - variations_at(chain, b);
}

std::vector<double> real_roots_exact(const QPoly& p) {
  check_degree(p.degree());
  std::vector<double> roots;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    for (double r : distinct_real_roots(parts[i]))
      roots.insert(roots.end(), i + 1, r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace aim::algebra
