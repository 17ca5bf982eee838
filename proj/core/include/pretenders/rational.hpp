#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pretenders/arith.hpp"

namespace pretenders {

enum class RoundingMode {
  half_even,  // ties go to the even last digit
  truncate,   // toward zero
};

/// Exact rational, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long num);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(const Natural& num, const Natural& den);
  static Rational make(long long num, long long den);
  static Rational from_mpq(mpq_class v);
  /// Exact value of a plain decimal such as "240.62" or "-3"; throws
  /// std::invalid_argument otherwise.
  static Rational parse_decimal(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Throws std::domain_error for zero.
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", or just "num" for integers.
  std::string to_string() const;
  /// Decimal rendering at `places` fractional digits with trailing zeros
  /// (and a bare trailing point) trimmed.
  std::string render_decimal(unsigned places,
                             RoundingMode mode = RoundingMode::half_even) const;
  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

}  // namespace pretenders
