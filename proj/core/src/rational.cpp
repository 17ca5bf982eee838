#include "pretenders/rational.hpp"

#include <stdexcept>

namespace pretenders {

Rational::Rational(long long num) : v_(static_cast<long>(num)) {}

Rational::Rational(const Natural& num, const Natural& den) {
  if (sgn(den.mpz()) == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  Rational r;
  r.v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.v_.canonicalize();
  return r;
}

Rational Rational::from_mpq(mpq_class v) {
  if (sgn(v.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const auto dot = body.find('.');
  const std::string_view whole = body.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  auto digits_only = [](std::string_view s) {
    return s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  if (whole.empty() || !digits_only(whole) || !digits_only(frac) ||
      (dot != std::string_view::npos && frac.empty()))
    throw std::invalid_argument("Rational: not a decimal: '" + std::string(text) + "'");

  mpz_class num(std::string(whole) + std::string(frac), 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  if (negative) num = -num;
  return from_mpq(mpq_class(num, den));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational::reciprocal: zero has no reciprocal");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

std::string Rational::render_decimal(unsigned places, RoundingMode mode) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class num = abs(v_.get_num()) * scale;
  const mpz_class& den = v_.get_den();

  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (mode == RoundingMode::half_even) {
    int c = cmp(mpz_class(rem * 2), den);
    if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;
  }

  std::string digits = quot.get_str(10);
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  std::string frac = digits.substr(digits.size() - places);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (sgn(v_) < 0 && out.find_first_not_of("0.") != std::string::npos) out.insert(0, "-");
  return out;
}

}  // namespace pretenders
