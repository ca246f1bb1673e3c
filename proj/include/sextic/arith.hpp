#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;

// Bad input: malformed symbol, invalid block, violated precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed a configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug or a contradiction with theory.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  i64 max_group_order = 4096;
  i64 max_work = 50000000;
  int max_isometry_rank = 8;
  bool debug_full_root_check = false;
};

// Cooperative step counter; throws BoundExceeded once the budget is spent.
class WorkBudget {
 public:
  explicit WorkBudget(i64 limit) : limit_(limit) {}
  void spend(i64 n, const char* what) {
    used_ += n;
    if (used_ > limit_)
      throw BoundExceeded(std::string("work budget exceeded in ") + what + " (limit " +
                          std::to_string(limit_) + ")");
  }
  i64 used() const { return used_; }

 private:
  i64 limit_;
  i64 used_ = 0;
};

inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);
i64 inverse_mod(i64 a, i64 m);
i64 ipow(i64 b, int e);
bool is_prime(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> prime_divisors(i64 n);
int valuation(i64 n, i64 p);
int legendre(i64 a, i64 p);

i64 to_i64(const Int& x);
Int floor_div(const Int& a, const Int& b);
Int isqrt(const Int& x);
bool is_square(const Int& x);
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
// Fraction m/n in lowest terms, printed as "m/n" (or "m" when n = 1).
std::string rat_str(const Rat& r);

}  // namespace sextic
