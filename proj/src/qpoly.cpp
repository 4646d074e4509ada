#include "aim/qpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "aim/error.hpp"

namespace aim::algebra {

namespace {

// Common denominator of all coefficients.
mpz_class denominator_lcm(const std::vector<Rational>& c) {
  mpz_class l = 1;
  for (const auto& r : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.mpq().get_den_mpz_t());
  return l;
}

std::vector<mpz_class> scaled_to_integers(const std::vector<Rational>& c, const mpz_class& l) {
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), c[i].mpq().get_den_mpz_t());
    out[i] *= c[i].mpq().get_num();
  }
  return out;
}

// Primitive integer representation used by the gcd.
std::vector<mpz_class> primitive_ints(const QPoly& p) {
  auto v = scaled_to_integers(p.coeffs(), denominator_lcm(p.coeffs()));
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

void trim_ints(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// In-place pseudo-remainder of a by b (deg a >= deg b).
void pseudo_rem(std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g;
    const mpz_class fb = la / g;
    for (auto& x : a) x *= fa;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= fb * b[i];
    trim_ints(a);
    make_primitive(a);
  }
}

QPoly from_ints(const std::vector<mpz_class>& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(mpq_class(x));
  return QPoly(std::move(c));
}

}  // namespace

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

QPoly QPoly::monomial(const Rational& c, unsigned degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::x() { return monomial(Rational(1), 1); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int QPoly::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Rational QPoly::eval(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.mpq();
    acc += it->mpq();
  }
  return Rational(std::move(acc));
}

double QPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r = *this;
  const Rational lc = leading();
  for (auto& x : r.c_) x /= lc;
  return r;
}

Rational QPoly::content() const {
  if (is_zero()) return {};
  mpz_class g = 0;
  for (const auto& r : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.mpq().get_num_mpz_t());
  return Rational(mpq_class(g, denominator_lcm(c_)));
}

QPoly QPoly::primitive() const {
  if (is_zero()) return {};
  auto v = primitive_ints(*this);
  if (v.back() < 0)
    for (auto& x : v) x = -x;
  return from_ints(v);
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Convolve over the integers, then restore the denominators once: this
  // avoids a gcd per coefficient product.
  const mpz_class la = denominator_lcm(a.c_);
  const mpz_class lb = denominator_lcm(b.c_);
  const auto ia = scaled_to_integers(a.c_, la);
  const auto ib = scaled_to_integers(b.c_, lb);
  std::vector<mpz_class> acc(ia.size() + ib.size() - 1);
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (ia[i] == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const mpz_class l = la * lb;
  std::vector<Rational> c;
  c.reserve(acc.size());
  for (auto& x : acc) c.emplace_back(mpq_class(x, l));
  return QPoly(std::move(c));
}

QPoly QPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

std::string QPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rational lb = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const Rational q = top / lb;
    const auto shift = static_cast<std::size_t>(i - b.degree());
    quo[shift] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[j + shift] -= q * bc[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return q;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly(Rational(1));
  // Primitive remainder sequence over Z keeps coefficient growth in check.
  auto u = primitive_ints(a);
  auto v = primitive_ints(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return QPoly(Rational(1));
    pseudo_rem(u, v);
    std::swap(u, v);
  }
  return from_ints(u).monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.degree() <= 0) return {};
  // Yun's algorithm.
  std::vector<QPoly> out;
  const QPoly dp = p.derivative();
  QPoly a = gcd(p, dp);
  QPoly b = exact_div(p, a);
  QPoly c = exact_div(dp, a);
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g.degree() > 0 ? g : QPoly(Rational(1)));
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() <= 0) out.pop_back();
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace aim::algebra
