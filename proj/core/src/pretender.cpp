#include "pretenders/pretender.hpp"

namespace pretenders {
namespace {

void require_composite(u64 q) {
  if (q < 4 || is_prime(q)) throw NotCompositeError(q);
}

bool pretends(u64 q, u64 r) { return mod_pow(r, q, q) == r; }

}  // namespace

bool is_prime_pretender(u64 q, u64 b) {
  require_composite(q);
  return pretends(q, b % q);
}

bool is_prime_pretender(u64 q, const Natural& b) {
  require_composite(q);
  return pretends(q, b.mod(q));
}

bool is_pseudoprime_first_form(u64 q, u64 b) {
  require_composite(q);
  return mod_pow(b, q - 1, q) == 1;
}

u32 primary_pretender_oracle(u64 b) {
  for (u32 q : carmichael_sieve().composites())
    if (pretends(q, b % q)) return q;
  // Unreachable: 561 is a pretender to every base.
  throw std::logic_error("primary_pretender_oracle: no pretender <= 561");
}

u32 primary_pretender_oracle(const Natural& b) {
  if (b.fits_u64()) return primary_pretender_oracle(b.to_u64());
  for (u32 q : carmichael_sieve().composites())
    if (pretends(q, b.mod(q))) return q;
  throw std::logic_error("primary_pretender_oracle: no pretender <= 561");
}

std::vector<u32> pretender_profile(u64 b, u32 limit) {
  std::vector<u32> out;
  for (u64 q = 4; q <= limit; ++q)
    if (!is_prime(q) && pretends(q, b % q)) out.push_back(static_cast<u32>(q));
  return out;
}

}  // namespace pretenders
