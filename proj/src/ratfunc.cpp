#include "aim/ratfunc.hpp"

#include <algorithm>
#include <ostream>

#include "aim/error.hpp"

namespace aim::algebra {

namespace {

// Rational gcd of every coefficient of every polynomial visited.
struct ContentAccumulator {
  mpz_class num = 0;
  mpz_class den = 1;
  void add(const QPoly& p) {
    for (const auto& c : p.coeffs()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.mpq().get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.mpq().get_den_mpz_t());
    }
  }
};

}  // namespace

RatFunc::RatFunc(BiPoly num) : num_(std::move(num)), den_(1) { canonicalize(); }

RatFunc::RatFunc(BiPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::InvalidArgument, "rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  std::vector<QPoly> slices = num_.e_slices();

  // Common pure power of z first: cheap and by far the most frequent factor.
  int vz = den_.valuation();
  for (const auto& s : slices)
    if (!s.is_zero()) vz = std::min(vz, s.valuation());
  if (vz > 0) {
    auto drop = [vz](const QPoly& p) {
      if (p.is_zero()) return p;
      const auto& c = p.coeffs();
      return QPoly(std::vector<Rational>(c.begin() + vz, c.end()));
    };
    den_ = drop(den_);
    for (auto& s : slices) s = drop(s);
  }

  // Remaining common factor: the denominator has no E, so any common factor
  // divides every E-slice of the numerator.
  if (den_.degree() > 0) {
    QPoly g = den_;
    for (const auto& s : slices) {
      if (s.is_zero()) continue;
      g = gcd(g, s);
      if (g.degree() <= 0) break;
    }
    if (g.degree() > 0) {
      den_ = exact_div(den_, g);
      for (auto& s : slices)
        if (!s.is_zero()) s = exact_div(s, g);
    }
  }

  ContentAccumulator content;
  content.add(den_);
  for (const auto& s : slices) content.add(s);
  Rational scale(mpq_class(content.den, content.num));
  if (den_.leading().sign() < 0) scale = -scale;
  if (scale != Rational(1)) {
    den_ *= scale;
    for (auto& s : slices) s *= scale;
  }
  num_ = BiPoly(std::move(slices));
}

RatFunc RatFunc::derive_z() const {
  if (num_.is_zero()) return {};
  if (den_.degree() <= 0) return RatFunc(num_.derive_z(), den_);
  // (N/D)' = (N' D - N D') / D^2; cancelling g = gcd(D, D') up front keeps
  // the intermediate degree down.
  const QPoly dd = den_.derivative();
  const QPoly g = gcd(den_, dd);
  const QPoly d_over_g = exact_div(den_, g);
  const QPoly dd_over_g = exact_div(dd, g);
  BiPoly num = num_.derive_z() * d_over_g - num_ * dd_over_g;
  return RatFunc(std::move(num), den_ * d_over_g);
}

QPoly RatFunc::eval_numer_at(const Rational& z0) const { return num_.eval_z(z0); }

double RatFunc::eval(double z, double e) const { return num_.eval(z, e) / den_.eval(z); }

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  const QPoly g = gcd(a.den_, b.den_);
  const QPoly a_cof = exact_div(a.den_, g);
  const QPoly b_cof = exact_div(b.den_, g);
  return RatFunc(a.num_ * b_cof + b.num_ * a_cof, a.den_ * b_cof);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel before multiplying so the product stays small.
  QPoly g1 = QPoly(1), g2 = QPoly(1);
  if (a.den_.degree() > 0 && !b.num_.is_zero()) {
    g1 = a.den_;
    for (const auto& s : b.num_.e_slices()) {
      if (s.is_zero()) continue;
      g1 = gcd(g1, s);
      if (g1.degree() <= 0) break;
    }
  }
  if (b.den_.degree() > 0) {
    g2 = b.den_;
    for (const auto& s : a.num_.e_slices()) {
      if (s.is_zero()) continue;
      g2 = gcd(g2, s);
      if (g2.degree() <= 0) break;
    }
  }
  auto div_slices = [](const BiPoly& p, const QPoly& g) {
    if (g.degree() <= 0) return p;
    std::vector<QPoly> v;
    for (const auto& s : p.e_slices()) v.push_back(s.is_zero() ? s : exact_div(s, g));
    return BiPoly(std::move(v));
  };
  const QPoly da = g1.degree() > 0 ? exact_div(a.den_, g1) : a.den_;
  const QPoly db = g2.degree() > 0 ? exact_div(b.den_, g2) : b.den_;
  return RatFunc(div_slices(a.num_, g2) * div_slices(b.num_, g1), da * db);
}

std::string RatFunc::to_string() const {
  if (den_ == QPoly(1)) return num_.to_string();
  return "[" + num_.to_string() + "] / [" + den_.to_string("z") + "]";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace aim::algebra
