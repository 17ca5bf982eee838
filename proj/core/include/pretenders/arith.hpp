#pragma once

// Foundational arithmetic: word-sized modular exponentiation, a small-integer
// sieve with prime-power factorizations, and primorial-friendly naturals.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pretenders {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// The Carmichael bound: 561 is a prime pretender to every base, so every
/// primary pretender lies in [4, 561].
inline constexpr u32 kCarmichaelBound = 561;

/// base^exp mod modulus by binary exponentiation. Products go through 128-bit
/// intermediates, so any 64-bit modulus is safe.
u64 mod_pow(u64 base, u64 exp, u64 modulus);

/// Deterministic trial-division primality for word-sized n.
bool is_prime(u64 n);

u64 gcd(u64 a, u64 b);

// -----------------------------------------------------------------------------
// PrimePower
// -----------------------------------------------------------------------------

class PrimePower {
 public:
  /// Throws std::invalid_argument unless p is prime and e >= 1.
  static PrimePower make(u32 p, u32 e);

  u32 prime() const { return p_; }
  u32 exponent() const { return e_; }
  u64 modulus() const { return modulus_; }
  /// Euler phi of the modulus: p^(e-1) (p - 1).
  u64 totient() const { return modulus_ / p_ * (p_ - 1); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  PrimePower(u32 p, u32 e, u64 m) : p_(p), e_(e), modulus_(m) {}
  u32 p_;
  u32 e_;
  u64 modulus_;
};

std::string to_string(const PrimePower& pp);

// -----------------------------------------------------------------------------
// Sieve
// -----------------------------------------------------------------------------

/// Primality table and full prime-power factorizations for every n <= limit.
class Sieve {
 public:
  explicit Sieve(u32 limit);

  u32 limit() const { return limit_; }
  bool is_prime(u32 n) const;
  bool is_composite(u32 n) const { return n >= 4 && !is_prime(n); }

  /// Ascending prime-power factorization of 2 <= n <= limit.
  std::span<const PrimePower> factor(u32 n) const;

  std::span<const u32> primes() const { return primes_; }
  /// Composites 4..limit in increasing order.
  std::span<const u32> composites() const { return composites_; }

 private:
  u32 limit_;
  std::vector<bool> prime_;
  std::vector<u32> primes_;
  std::vector<u32> composites_;
  std::vector<std::vector<PrimePower>> factors_;
};

/// The process-wide sieve up to the Carmichael bound.
const Sieve& carmichael_sieve();

/// p_1 = 2, p_2 = 3, ...
u32 nth_prime(u32 k);
/// Number of primes <= x.
u32 prime_count_upto(u64 x);

// -----------------------------------------------------------------------------
// Natural
// -----------------------------------------------------------------------------

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() = default;
  Natural(u64 v);  // NOLINT(google-explicit-constructor)
  /// Parses a decimal string; throws std::invalid_argument on anything else.
  static Natural parse(std::string_view decimal);
  static Natural from_mpz(mpz_class v);

  /// this mod m for a machine-word modulus m >= 1.
  u64 mod(u64 m) const;
  std::string to_string() const;
  std::size_t digits() const { return to_string().size(); }
  bool fits_u64() const;
  u64 to_u64() const;

  const mpz_class& mpz() const { return v_; }

  Natural& operator+=(const Natural& o);
  Natural& operator*=(const Natural& o);
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  /// Exact division; throws std::domain_error when d does not divide.
  Natural divide_exact(const Natural& d) const;
  /// Multiplicity of prime p in this value (this must be nonzero).
  u32 valuation(u32 p) const;

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

Natural lcm(const Natural& a, const Natural& b);

}  // namespace pretenders
