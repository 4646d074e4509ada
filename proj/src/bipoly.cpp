#include "aim/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace aim::algebra {

namespace {
const QPoly kZero;
}

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) e_.emplace_back(c);
}

BiPoly::BiPoly(QPoly z_poly) {
  if (!z_poly.is_zero()) e_.push_back(std::move(z_poly));
}

BiPoly::BiPoly(std::vector<QPoly> e_slices) : e_(std::move(e_slices)) { trim(); }

BiPoly BiPoly::z() { return BiPoly(QPoly::x()); }

BiPoly BiPoly::E() { return term(Rational(1), 0, 1); }

BiPoly BiPoly::term(const Rational& c, unsigned deg_z, unsigned deg_e) {
  if (c.is_zero()) return {};
  std::vector<QPoly> v(deg_e + 1);
  v[deg_e] = QPoly::monomial(c, deg_z);
  return BiPoly(std::move(v));
}

void BiPoly::trim() {
  while (!e_.empty() && e_.back().is_zero()) e_.pop_back();
}

int BiPoly::deg_z() const noexcept {
  int d = -1;
  for (const auto& s : e_) d = std::max(d, s.degree());
  return d;
}

std::size_t BiPoly::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& s : e_)
    for (const auto& c : s.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

const QPoly& BiPoly::e_coeff(unsigned j) const { return j < e_.size() ? e_[j] : kZero; }

Rational BiPoly::coeff(unsigned deg_z, unsigned deg_e) const {
  return e_coeff(deg_e).coeff(deg_z);
}

BiPoly BiPoly::derive_z() const {
  std::vector<QPoly> v;
  v.reserve(e_.size());
  for (const auto& s : e_) v.push_back(s.derivative());
  return BiPoly(std::move(v));
}

QPoly BiPoly::eval_z(const Rational& z0) const {
  std::vector<Rational> v;
  v.reserve(e_.size());
  for (const auto& s : e_) v.push_back(s.eval(z0));
  return QPoly(std::move(v));
}

std::vector<double> BiPoly::eval_e(double e0) const {
  std::vector<double> out(static_cast<std::size_t>(std::max(deg_z(), -1) + 1), 0.0);
  double pe = 1.0;
  for (const auto& s : e_) {
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i].to_double() * pe;
    pe *= e0;
  }
  return out;
}

double BiPoly::eval(double z, double e) const {
  double acc = 0.0;
  for (auto it = e_.rbegin(); it != e_.rend(); ++it) acc = acc * e + it->eval(z);
  return acc;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.e_.size() > e_.size()) e_.resize(o.e_.size());
  for (std::size_t j = 0; j < o.e_.size(); ++j) e_[j] += o.e_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.e_.size() > e_.size()) e_.resize(o.e_.size());
  for (std::size_t j = 0; j < o.e_.size(); ++j) e_[j] -= o.e_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    e_.clear();
    return *this;
  }
  for (auto& x : e_) x *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> v(a.e_.size() + b.e_.size() - 1);
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.e_.size(); ++j) {
      if (b.e_[j].is_zero()) continue;
      v[i + j] += a.e_[i] * b.e_[j];
    }
  }
  return BiPoly(std::move(v));
}

BiPoly operator*(const BiPoly& a, const QPoly& z_poly) {
  if (z_poly.is_zero()) return {};
  std::vector<QPoly> v;
  v.reserve(a.e_slices().size());
  for (const auto& s : a.e_slices()) v.push_back(s * z_poly);
  return BiPoly(std::move(v));
}

BiPoly operator*(const QPoly& z_poly, const BiPoly& a) { return a * z_poly; }

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = deg_e(); j >= 0; --j) {
    const QPoly& s = e_[static_cast<std::size_t>(j)];
    if (s.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << "(" << s.to_string("z") << ")";
    } else {
      os << "(" << s.to_string("z") << ")*E";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

}  // namespace aim::algebra
