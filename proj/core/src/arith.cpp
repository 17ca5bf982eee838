#include "pretenders/arith.hpp"

#include <climits>
#include <numeric>

namespace pretenders {

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
  if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be >= 1");
  if (modulus == 1) return 0;
  __extension__ using u128 = unsigned __int128;
  u64 result = 1;
  base %= modulus;
  while (exp != 0) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % modulus);
    base = static_cast<u64>(static_cast<u128>(base) * base % modulus);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

PrimePower PrimePower::make(u32 p, u32 e) {
  if (!is_prime(p)) throw std::invalid_argument("PrimePower: " + std::to_string(p) + " is not prime");
  if (e == 0) throw std::invalid_argument("PrimePower: exponent must be >= 1");
  u64 m = 1;
  for (u32 i = 0; i < e; ++i) {
    if (m > UINT64_MAX / p) throw std::overflow_error("PrimePower: modulus exceeds 64 bits");
    m *= p;
  }
  return PrimePower(p, e, m);
}

std::string to_string(const PrimePower& pp) {
  std::string s = std::to_string(pp.prime());
  if (pp.exponent() > 1) s += "^" + std::to_string(pp.exponent());
  return s;
}

Sieve::Sieve(u32 limit) : limit_(limit), prime_(static_cast<std::size_t>(limit) + 1, true) {
  if (limit < 2) throw std::invalid_argument("Sieve: limit must be >= 2");
  prime_[0] = prime_[1] = false;
  for (u32 i = 2; static_cast<u64>(i) * i <= limit; ++i)
    if (prime_[i])
      for (u32 j = i * i; j <= limit; j += i) prime_[j] = false;

  factors_.resize(static_cast<std::size_t>(limit) + 1);
  for (u32 n = 2; n <= limit; ++n) {
    if (prime_[n]) {
      primes_.push_back(n);
    } else if (n >= 4) {
      composites_.push_back(n);
    }
    u32 rest = n;
    for (u32 p : primes_) {
      if (static_cast<u64>(p) * p > rest) break;
      u32 e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e) factors_[n].push_back(PrimePower::make(p, e));
    }
    if (rest > 1) factors_[n].push_back(PrimePower::make(rest, 1));
  }
}

bool Sieve::is_prime(u32 n) const {
  if (n > limit_) throw std::out_of_range("Sieve: " + std::to_string(n) + " beyond limit");
  return prime_[n];
}

std::span<const PrimePower> Sieve::factor(u32 n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("Sieve::factor: argument out of range");
  return factors_[n];
}

const Sieve& carmichael_sieve() {
  static const Sieve sieve(kCarmichaelBound);
  return sieve;
}

u32 nth_prime(u32 k) {
  if (k == 0) throw std::invalid_argument("nth_prime: k must be >= 1");
  u32 count = 0;
  for (u32 n = 2;; ++n)
    if (is_prime(n) && ++count == k) return n;
}

u32 prime_count_upto(u64 x) {
  u32 count = 0;
  for (u64 n = 2; n <= x; ++n) count += is_prime(n) ? 1 : 0;
  return count;
}

Natural::Natural(u64 v) {
  mpz_import(v_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("Natural: empty string");
  for (char c : decimal)
    if (c < '0' || c > '9')
      throw std::invalid_argument("Natural: not a decimal natural: " + std::string(decimal));
  Natural n;
  n.v_.set_str(std::string(decimal), 10);
  return n;
}

Natural Natural::from_mpz(mpz_class v) {
  if (sgn(v) < 0) throw std::invalid_argument("Natural: negative value");
  Natural n;
  n.v_ = std::move(v);
  return n;
}

u64 Natural::mod(u64 m) const {
  if (m == 0) throw std::invalid_argument("Natural::mod: modulus must be >= 1");
  if (m <= ULONG_MAX) return mpz_fdiv_ui(v_.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_class r = v_ % Natural(m).v_;
  return Natural::from_mpz(r).to_u64();
}

std::string Natural::to_string() const { return v_.get_str(10); }

bool Natural::fits_u64() const { return mpz_sizeinbase(v_.get_mpz_t(), 2) <= 64; }

u64 Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural: value exceeds 64 bits");
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v_.get_mpz_t());
  return out;
}

Natural& Natural::operator+=(const Natural& o) {
  v_ += o.v_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  v_ *= o.v_;
  return *this;
}

Natural Natural::divide_exact(const Natural& d) const {
  if (sgn(d.v_) == 0 || !mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()))
    throw std::domain_error("Natural::divide_exact: divisor does not divide");
  Natural q;
  mpz_divexact(q.v_.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return q;
}

u32 Natural::valuation(u32 p) const {
  if (sgn(v_) == 0) throw std::domain_error("Natural::valuation: zero");
  mpz_class rest = v_;
  u32 e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

Natural lcm(const Natural& a, const Natural& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(out);
}

}  // namespace pretenders
