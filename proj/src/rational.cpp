#include "aim/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

#include "aim/error.hpp"

namespace aim::algebra {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view raw) {
  const std::string_view text = trim(raw);
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  mpq_class value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
      const auto* first = exp_text.data();
      const auto* last = first + exp_text.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (exp_text.empty() || ec != std::errc() || ptr != last) bad_number(text);
      s = s.substr(0, e);
    }
    std::string digits;
    long frac_len = 0;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const auto ip = s.substr(0, dot);
      const auto fp = s.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
          (ip.empty() && fp.empty()))
        bad_number(text);
      digits = std::string(ip) + std::string(fp);
      frac_len = static_cast<long>(fp.size());
    } else {
      if (!all_digits(s)) bad_number(text);
      digits = std::string(s);
    }
    const long scale = exponent - frac_len;
    mpz_class mant(digits, 10);
    if (scale >= 0) {
      value = mpq_class(mant * pow10(static_cast<unsigned long>(scale)));
    } else {
      value = mpq_class(mant, pow10(static_cast<unsigned long>(-scale)));
    }
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

double Rational::to_double() const { return v_.get_d(); }

std::string Rational::to_string() const { return v_.get_str(10); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, unsigned e) {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), r.mpq().get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.mpq().get_den_mpz_t(), e);
  return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace aim::algebra
