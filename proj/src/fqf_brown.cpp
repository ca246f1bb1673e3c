#include <map>

#include "sextic/fqf.hpp"

namespace sextic {

namespace {

// Elements of Z[x]/(x^M - 1) reduced modulo the cyclotomic polynomial Phi_M.  Exponents are
// stored through the CRT isomorphism Z/M = prod Z/q_i (q_i = p_i^a_i), one digit per axis, and
// an axis digit j*p^(a-1)+s with j = p-1 is rewritten as -sum_{t<p-1} (t*p^(a-1)+s).  What is
// left is the standard Z-basis of Z[zeta_M], so equality can be decided coefficientwise.
class CyclotomicReducer {
 public:
  explicit CyclotomicReducer(i64 M) : M_(M) {
    for (auto& [p, a] : factorize(M)) axes_.push_back({p, ipow(p, a)});
    i64 stride = 1;
    for (auto& ax : axes_) {
      ax.stride = stride;
      stride *= ax.q;
    }
  }

  std::vector<Int> reduce(const std::vector<Int>& coeffs) const {
    // Move to the multi-index layout.
    std::vector<Int> v(M_, Int(0));
    for (i64 e = 0; e < M_; ++e) {
      if (coeffs[e] == 0) continue;
      v[layout(e)] += coeffs[e];
    }
    for (const Axis& ax : axes_) {
      i64 block = ax.q / ax.p;  // p^(a-1)
      for (i64 idx = 0; idx < M_; ++idx) {
        i64 digit = (idx / ax.stride) % ax.q;
        if (digit / block != ax.p - 1 || v[idx] == 0) continue;
        Int c = v[idx];
        v[idx] = 0;
        i64 s = digit % block;
        i64 base = idx - digit * ax.stride;
        for (i64 t = 0; t + 1 < ax.p; ++t) v[base + (t * block + s) * ax.stride] -= c;
      }
    }
    return v;
  }

 private:
  struct Axis {
    i64 p, q, stride = 1;
  };
  i64 layout(i64 e) const {
    i64 idx = 0;
    for (const Axis& ax : axes_) idx += (e % ax.q) * ax.stride;
    return idx;
  }
  i64 M_;
  std::vector<Axis> axes_;
};

// Histogram of q-values: count[e] = #{x : q(x) = 2e/M}, i.e. exp(i pi q(x)) = zeta_M^e.
std::vector<Int> gauss_histogram(const FiniteQuadraticForm& f, i64 M, const Limits& limits) {
  std::vector<Int> h(M, Int(0));
  i64 n = f.size();
  if (n > limits.max_group_order)
    throw BoundExceeded("brown_gauss: form of order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_group_order));
  i64 step = M / (2 * f.exponent());
  std::vector<i64> counts(2 * f.exponent(), 0);
  for (i64 i = 0; i < n; ++i) counts[f.q_scaled(f.element_at(i))]++;
  for (std::size_t e = 0; e < counts.size(); ++e)
    if (counts[e]) h[e * step] += Int(static_cast<long>(counts[e]));
  return h;
}

}  // namespace

int brown_gauss(const FiniteQuadraticForm& f, const Limits& limits) {
  if (f.trivial()) return 0;
  i64 order = f.size();
  // Reference form R with known Gauss sum making |f||R| a perfect square.
  std::vector<FormBlock> ref;
  int phase = 0;
  for (auto& [p, e] : factorize(order)) {
    if (e % 2 == 0) continue;
    if (p == 2) {
      ref.push_back(FormBlock::cyclic(1, 2));  // 1 + i = sqrt2 zeta_8
      phase += 1;
    } else {
      ref.push_back(FormBlock::cyclic(2, p));  // classical Gauss sum: sqrt p or i sqrt p
      phase += (p % 4 == 1) ? 0 : 2;
    }
  }
  FiniteQuadraticForm r = from_blocks(ref);
  i64 M = lcm64(lcm64(2 * f.exponent(), 2 * r.exponent()), 8);
  if (M > (i64(1) << 22)) throw BoundExceeded("brown_gauss: cyclotomic order " + std::to_string(M) + " too large");
  WorkBudget budget(limits.max_work);
  budget.spend(order, "brown_gauss");
  std::vector<Int> hf = gauss_histogram(f, M, limits);
  std::vector<Int> hr = gauss_histogram(r, M, limits);
  std::vector<Int> prod(M, Int(0));
  for (i64 a = 0; a < M; ++a) {
    if (hf[a] == 0) continue;
    for (i64 b = 0; b < M; ++b) {
      if (hr[b] == 0) continue;
      budget.spend(1, "brown_gauss");
      prod[(a + b) % M] += hf[a] * hr[b];
    }
  }
  Int sq = Int(static_cast<long>(order)) * Int(static_cast<long>(r.size()));
  Int K = sqrt(sq);
  if (K * K != sq) throw InternalError("brown_gauss: reference did not produce a square order");
  CyclotomicReducer red(M);
  std::vector<Int> lhs = red.reduce(prod);
  for (int t = 0; t < 8; ++t) {
    std::vector<Int> target(M, Int(0));
    target[(M / 8) * t] = K;
    if (red.reduce(target) == lhs) return static_cast<int>(mod(t - phase, 8));
  }
  throw InternalError("brown_gauss: Gauss sum is not an eighth root of unity times sqrt|f|");
}

int brown_of_blocks(const std::vector<FormBlock>& blocks) {
  i64 total = 0;
  for (const FormBlock& b : blocks) {
    switch (b.kind) {
      case FormBlock::Kind::U:
        break;
      case FormBlock::Kind::V:
        total += 4 * b.scale();
        break;
      case FormBlock::Kind::Cyclic: {
        i64 p = b.prime();
        int k = b.scale();
        if (p == 2) {
          i64 a = mod(b.num, 16);
          total += a + k * ((a * a - 1) / 2);
        } else if (k % 2 == 1) {
          i64 a = mod(b.num / 2, p);
          total += 2 * legendre(a, p) - legendre(-1, p) - 1;
        }
        break;
      }
    }
  }
  return static_cast<int>(mod(total, 8));
}

int brown_blocks(const FiniteQuadraticForm& f, const Limits& limits) {
  return brown_of_blocks(orthogonal_blocks(f, limits));
}

}  // namespace sextic
