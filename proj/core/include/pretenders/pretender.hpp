#pragma once

// The pretender congruences and the brute-force q_b oracle. Everything else in
// the library is checked against these.

#include <stdexcept>
#include <string>
#include <vector>

#include "pretenders/arith.hpp"

namespace pretenders {

/// Raised when a pretender predicate is handed a q that is not composite.
class NotCompositeError : public std::invalid_argument {
 public:
  explicit NotCompositeError(u64 q)
      : std::invalid_argument(std::to_string(q) + " is not composite"), q_(q) {}
  u64 value() const { return q_; }

 private:
  u64 q_;
};

/// b^q == b (mod q) for composite q.
bool is_prime_pretender(u64 q, u64 b);
bool is_prime_pretender(u64 q, const Natural& b);

/// b^(q-1) == 1 (mod q) for composite q.
bool is_pseudoprime_first_form(u64 q, u64 b);

/// Least composite q with b^q == b (mod q). Never exceeds 561.
u32 primary_pretender_oracle(u64 b);
u32 primary_pretender_oracle(const Natural& b);

/// Every composite pretender to base b up to `limit`, ascending.
std::vector<u32> pretender_profile(u64 b, u32 limit);

}  // namespace pretenders
