#include "sextic/arith.hpp"

#include <numeric>

namespace sextic {

i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr != 0) {
    i64 q = r / nr;
    i64 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod(t, m);
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

int valuation(i64 n, i64 p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  // Euler's criterion with modular exponentiation.
  i64 e = (p - 1) / 2, base = a, r = 1;
  while (e > 0) {
    if (e & 1) r = static_cast<i64>((__int128)r * base % p);
    base = static_cast<i64>((__int128)base * base % p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

i64 to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw BoundExceeded("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int isqrt(const Int& x) {
  if (x < 0) throw DomainError("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

Int ceil_rat(const Rat& r) { return -floor_div(-r.get_num(), r.get_den()); }

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace sextic
