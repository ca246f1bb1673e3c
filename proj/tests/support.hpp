#pragma once

#include <complex>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "sextic/arith.hpp"
#include "sextic/fqf.hpp"

namespace sextic::testing {

inline constexpr std::uint64_t kSeed = 20061015;

inline FormBlock random_block(std::mt19937_64& rng, int max_exp = 3) {
  static const i64 odd_primes[] = {3, 5, 7};
  int k = std::uniform_int_distribution<int>(0, 5)(rng);
  if (k == 0) return FormBlock::u(std::uniform_int_distribution<int>(1, max_exp)(rng));
  if (k == 1) return FormBlock::v(std::uniform_int_distribution<int>(1, max_exp)(rng));
  if (k == 2) {
    i64 n = ipow(2, std::uniform_int_distribution<int>(1, max_exp)(rng));
    i64 a;
    do a = std::uniform_int_distribution<i64>(1, 2 * n - 1)(rng);
    while (a % 2 == 0);
    return FormBlock::cyclic(a, n);
  }
  i64 p = odd_primes[std::uniform_int_distribution<int>(0, 2)(rng)];
  i64 n = p == 3 ? ipow(3, std::uniform_int_distribution<int>(1, 2)(rng)) : p;
  i64 a;
  do a = 2 * std::uniform_int_distribution<i64>(1, n - 1)(rng);
  while (a % p == 0);
  return FormBlock::cyclic(a, n);
}

// Random form of order at most `max_order`.
inline std::vector<FormBlock> random_blocks(std::mt19937_64& rng, i64 max_order, int max_blocks = 3) {
  std::vector<FormBlock> out;
  i64 order = 1;
  int want = std::uniform_int_distribution<int>(1, max_blocks)(rng);
  for (int tries = 0; tries < 50 && static_cast<int>(out.size()) < want; ++tries) {
    FormBlock b = random_block(rng);
    if (order * b.order() > max_order) continue;
    order *= b.order();
    out.push_back(b);
  }
  return out;
}

// Brown invariant straight from the Gauss sum, in floating point.
inline int gauss_sum_oracle(const FiniteQuadraticForm& f) {
  const double pi = std::acos(-1.0);
  std::complex<double> s = 0;
  for (i64 i = 0; i < f.size(); ++i) {
    double q = f.q(f.element_at(i)).get_d();
    s += std::polar(1.0, pi * q);
  }
  double k = std::arg(s) / (pi / 4);
  int r = static_cast<int>(std::lround(k));
  REQUIRE(std::abs(k - r) < 1e-6);  // an eighth root of unity up to a positive factor
  return ((r % 8) + 8) % 8;
}

// The group generated by `gens`, each element recorded as the permutation of element indices.
inline std::set<std::vector<i64>> perm_closure(const FiniteQuadraticForm& f, const std::vector<FormAutomorphism>& gens) {
  auto perm = [&](const FormAutomorphism& a) {
    std::vector<i64> p(f.size());
    for (i64 i = 0; i < f.size(); ++i) p[i] = f.index_of(a.apply(f, f.element_at(i)));
    return p;
  };
  std::vector<std::vector<i64>> gp;
  for (const auto& g : gens) gp.push_back(perm(g));
  std::vector<i64> id(f.size());
  for (i64 i = 0; i < f.size(); ++i) id[i] = i;
  std::set<std::vector<i64>> seen{id};
  std::vector<std::vector<i64>> todo{id};
  while (!todo.empty()) {
    std::vector<i64> x = todo.back();
    todo.pop_back();
    for (const auto& g : gp) {
      std::vector<i64> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = g[x[i]];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

}  // namespace sextic::testing
