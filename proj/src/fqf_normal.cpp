#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "sextic/fqf.hpp"

namespace sextic {

namespace {

// A subgroup of an ambient form given by an independent basis with known orders.
struct Span {
  std::vector<Element> basis;
  std::vector<i64> orders;

  i64 size() const {
    i64 s = 1;
    for (i64 d : orders) s *= d;
    return s;
  }
  Element at(const FiniteQuadraticForm& f, i64 index) const {
    Element x = f.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      i64 c = index % orders[i];
      index /= orders[i];
      if (c) x = f.add(x, f.scale(basis[i], c));
    }
    return x;
  }
};

Span span_of(const FiniteQuadraticForm& f, const std::vector<Element>& gens) {
  SubformBasis sb = subquotient_basis(f, gens, {});
  return {sb.basis, sb.form.orders()};
}

// N*b(x,y) rescaled to denominator pk, as an integer mod pk.
i64 b_at(const FiniteQuadraticForm& f, const Element& x, const Element& y, i64 pk) {
  __int128 v = static_cast<__int128>(f.b_scaled(x, y)) * pk;
  if (v % f.exponent() != 0) throw InternalError("orthogonal_blocks: pairing exceeds the block scale");
  return static_cast<i64>(v / f.exponent()) % pk;
}

i64 q_at(const FiniteQuadraticForm& f, const Element& x, i64 pk) {
  __int128 v = static_cast<__int128>(f.q_scaled(x)) * pk;
  if (v % f.exponent() != 0) throw InternalError("orthogonal_blocks: square exceeds the block scale");
  return static_cast<i64>(v / f.exponent()) % (2 * pk);
}

// Greedy orthogonal splitting of a p-group (given inside the ambient form f) into blocks.
std::vector<FormBlock> split_p_group(const FiniteQuadraticForm& f, Span h, i64 p, WorkBudget& budget) {
  std::vector<FormBlock> out;
  while (!h.basis.empty()) {
    i64 pk = *std::max_element(h.orders.begin(), h.orders.end());
    int k = valuation(pk, p);
    auto good_self = [&](const Element& x) {
      if (f.order_of(x) != pk) return false;
      return b_at(f, x, x, pk) % p != 0;
    };
    std::optional<Element> x;
    for (const Element& g : h.basis)
      if (good_self(g)) {
        x = g;
        break;
      }
    for (std::size_t i = 0; !x && i < h.basis.size(); ++i)
      for (std::size_t j = i + 1; j < h.basis.size(); ++j) {
        Element s = f.add(h.basis[i], h.basis[j]);
        if (good_self(s)) {
          x = s;
          break;
        }
      }
    if (!x) {
      i64 n = h.size();
      budget.spend(n, "orthogonal_blocks");
      for (i64 idx = 1; idx < n && !x; ++idx) {
        Element s = h.at(f, idx);
        if (good_self(s)) x = s;
      }
    }
    std::vector<Element> projected;
    if (x) {
      out.push_back(FormBlock::cyclic(q_at(f, *x, pk), pk));
      i64 u_inv = inverse_mod(b_at(f, *x, *x, pk), pk);
      for (const Element& y : h.basis) {
        i64 c = static_cast<i64>(static_cast<__int128>(b_at(f, y, *x, pk)) * u_inv % pk);
        projected.push_back(f.add(y, f.scale(*x, pk - c)));
      }
    } else {
      if (p != 2) throw InternalError("orthogonal_blocks: odd p-group without a cyclic summand");
      Element x2;
      bool have_x = false;
      for (const Element& g : h.basis)
        if (f.order_of(g) == pk) {
          x2 = g;
          have_x = true;
          break;
        }
      if (!have_x) throw InternalError("orthogonal_blocks: no element of maximal order");
      std::optional<Element> y;
      for (const Element& g : h.basis)
        if (b_at(f, x2, g, pk) % 2 != 0) {
          y = g;
          break;
        }
      if (!y) {
        i64 n = h.size();
        budget.spend(n, "orthogonal_blocks");
        for (i64 idx = 1; idx < n && !y; ++idx) {
          Element s = h.at(f, idx);
          if (b_at(f, x2, s, pk) % 2 != 0) y = s;
        }
      }
      if (!y) throw InternalError("orthogonal_blocks: degenerate 2-group");
      i64 alpha = q_at(f, x2, pk), gamma = q_at(f, *y, pk);
      // Both squares lie in (2/2^k)Z here; the block is U or V by the parity of their product.
      if (alpha % 2 != 0 || gamma % 2 != 0) throw InternalError("orthogonal_blocks: unexpected odd square");
      alpha /= 2;
      gamma /= 2;
      out.push_back((alpha * gamma) % 2 == 0 ? FormBlock::u(k) : FormBlock::v(k));
      i64 b00 = b_at(f, x2, x2, pk), b01 = b_at(f, x2, *y, pk), b11 = b_at(f, *y, *y, pk);
      i64 det = mod(static_cast<i64>((static_cast<__int128>(b00) * b11 - static_cast<__int128>(b01) * b01) % pk), pk);
      i64 dinv = inverse_mod(det, pk);
      for (const Element& z : h.basis) {
        i64 r0 = b_at(f, z, x2, pk), r1 = b_at(f, z, *y, pk);
        i64 s = mod(static_cast<i64>((static_cast<__int128>(r0) * b11 - static_cast<__int128>(r1) * b01) % pk), pk);
        i64 t = mod(static_cast<i64>((static_cast<__int128>(r1) * b00 - static_cast<__int128>(r0) * b01) % pk), pk);
        s = static_cast<i64>(static_cast<__int128>(s) * dinv % pk);
        t = static_cast<i64>(static_cast<__int128>(t) * dinv % pk);
        projected.push_back(f.add(z, f.add(f.scale(x2, pk - s), f.scale(*y, pk - t))));
      }
    }
    i64 before = h.size();
    h = span_of(f, projected);
    budget.spend(1, "orthogonal_blocks");
    if (h.size() >= before) throw InternalError("orthogonal_blocks: splitting made no progress");
  }
  return out;
}

std::vector<FormBlock> split_prime(const FiniteQuadraticForm& f, i64 p, WorkBudget& budget) {
  SubformBasis pp = primary_part(f, p);
  return split_p_group(f, {pp.basis, pp.form.orders()}, p, budget);
}

// (order, q) histogram keyed by the reduced fraction of q.
using Histogram = std::map<std::tuple<i64, i64, i64>, i64>;

Histogram histogram_of(const FiniteQuadraticForm& f, const std::vector<Element>& elements) {
  Histogram h;
  for (const Element& x : elements) {
    Rat q = f.q(x);
    h[{f.order_of(x), to_i64(q.get_num()), to_i64(q.get_den())}]++;
  }
  return h;
}

std::vector<Element> p_elements(const FiniteQuadraticForm& f, const SubformBasis& pp, WorkBudget& budget) {
  Span s{pp.basis, pp.form.orders()};
  i64 n = s.size();
  budget.spend(n, "p-part enumeration");
  std::vector<Element> out;
  out.reserve(n);
  for (i64 i = 0; i < n; ++i) out.push_back(s.at(f, i));
  return out;
}

// Backtracking search for q-preserving maps from the independent basis `src` (in f) into the
// elements `tgt` (in g).  Stops after the first solution unless `all` is set.
void match_bases(const FiniteQuadraticForm& f, const std::vector<Element>& src, const FiniteQuadraticForm& g,
                 const std::vector<Element>& tgt, bool all, WorkBudget& budget, const std::string& what,
                 std::vector<std::vector<Element>>& solutions) {
  i64 L = lcm64(f.exponent(), g.exponent());
  i64 sf = L / f.exponent(), sg = L / g.exponent();
  std::size_t r = src.size();
  std::vector<std::vector<std::size_t>> cand(r);
  for (std::size_t i = 0; i < r; ++i) {
    i64 ord = f.order_of(src[i]);
    i64 q = f.q_scaled(src[i]) * sf;
    for (std::size_t t = 0; t < tgt.size(); ++t)
      if (g.order_of(tgt[t]) == ord && g.q_scaled(tgt[t]) * sg == q) cand[i].push_back(t);
    if (cand[i].empty()) return;
  }
  std::vector<std::vector<i64>> bsrc(r, std::vector<i64>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) bsrc[i][j] = f.b_scaled(src[i], src[j]) * sf;
  std::vector<std::size_t> chosen(r);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == r) {
      std::vector<Element> imgs;
      for (std::size_t j = 0; j < r; ++j) imgs.push_back(tgt[chosen[j]]);
      solutions.push_back(std::move(imgs));
      return !all;
    }
    for (std::size_t t : cand[i]) {
      budget.spend(1, what.c_str());
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (g.b_scaled(tgt[t], tgt[chosen[j]]) * sg != bsrc[i][j]) ok = false;
      if (!ok) continue;
      chosen[i] = t;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  rec(0);
}

// Canonical odd-p blocks: per scale, (rank - 1) copies of the square-class representative and
// one block carrying the determinant class.
std::vector<FormBlock> canonical_odd(const std::vector<FormBlock>& blocks, i64 p) {
  auto rep = [p](int cls) {
    for (i64 m = 2;; m += 2)
      for (i64 s : {m, -m})
        if (m % p != 0 && legendre(s, p) == cls) return s;
  };
  std::map<i64, std::pair<int, int>> scales;  // den -> (rank, class)
  for (const FormBlock& b : blocks) {
    auto& e = scales.try_emplace(b.den, 0, 1).first->second;
    e.first++;
    e.second *= legendre(b.num, p);
  }
  std::vector<FormBlock> out;
  for (auto& [den, e] : scales) {
    for (int i = 0; i + 1 < e.first; ++i) out.push_back(FormBlock::cyclic(rep(1), den));
    out.push_back(FormBlock::cyclic(rep(e.second), den));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ScaleInfo {
  int k;
  int rank;
  bool odd;
};

std::vector<std::vector<FormBlock>> scale_candidates(const ScaleInfo& s) {
  std::vector<std::vector<FormBlock>> out;
  auto fill = [&](std::vector<FormBlock> base, int pairs) {
    if (pairs < 0) return;
    std::vector<FormBlock> a = base;
    for (int i = 0; i < pairs; ++i) a.push_back(FormBlock::u(s.k));
    out.push_back(a);
    if (pairs >= 1) {
      std::vector<FormBlock> b = base;
      for (int i = 0; i + 1 < pairs; ++i) b.push_back(FormBlock::u(s.k));
      b.push_back(FormBlock::v(s.k));
      out.push_back(b);
    }
  };
  i64 den = i64(1) << s.k;
  if (!s.odd) {
    fill({}, s.rank / 2);
  } else {
    std::vector<i64> nums = s.k == 1 ? std::vector<i64>{1, -1} : std::vector<i64>{1, -1, 3, -3};
    int c = s.rank % 2 == 1 ? 1 : 2;
    if (c == 1) {
      for (i64 a : nums) fill({FormBlock::cyclic(a, den)}, (s.rank - 1) / 2);
    } else {
      for (std::size_t i = 0; i < nums.size(); ++i)
        for (std::size_t j = i; j < nums.size(); ++j)
          fill({FormBlock::cyclic(nums[i], den), FormBlock::cyclic(nums[j], den)}, (s.rank - 2) / 2);
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

// Histogram of a block sum computed by convolving per-block histograms.
Histogram histogram_of_blocks(const std::vector<FormBlock>& blocks, WorkBudget& budget) {
  Histogram acc;
  acc[{1, 0, 1}] = 1;
  for (const FormBlock& b : blocks) {
    FiniteQuadraticForm fb = from_blocks({b});
    Histogram hb = histogram_of(fb, fb.elements(i64(1) << 40));
    Histogram next;
    for (auto& [ka, ca] : acc)
      for (auto& [kb, cb] : hb) {
        budget.spend(1, "normal_form");
        Rat q = Rat(std::get<1>(ka), std::get<2>(ka)) + Rat(std::get<1>(kb), std::get<2>(kb));
        q.canonicalize();
        while (q >= 2) q -= 2;
        next[{lcm64(std::get<0>(ka), std::get<0>(kb)), to_i64(q.get_num()), to_i64(q.get_den())}] += ca * cb;
      }
    acc = std::move(next);
  }
  return acc;
}

std::vector<FormBlock> canonical_two(const FiniteQuadraticForm& f, const std::vector<FormBlock>& greedy,
                                     WorkBudget& budget) {
  std::map<int, ScaleInfo> scales;
  for (const FormBlock& b : greedy) {
    auto& s = scales.try_emplace(b.scale(), ScaleInfo{b.scale(), 0, false}).first->second;
    s.rank += b.kind == FormBlock::Kind::Cyclic ? 1 : 2;
    if (b.kind == FormBlock::Kind::Cyclic) s.odd = true;
  }
  std::vector<std::vector<FormBlock>> candidates = {{}};
  for (auto& [k, s] : scales) {
    std::vector<std::vector<FormBlock>> next;
    for (const auto& c : candidates)
      for (const auto& add : scale_candidates(s)) {
        budget.spend(1, "normal_form");
        std::vector<FormBlock> v = c;
        v.insert(v.end(), add.begin(), add.end());
        next.push_back(std::move(v));
      }
    candidates = std::move(next);
  }
  std::sort(candidates.begin(), candidates.end());
  int br = brown_of_blocks(greedy);
  Histogram target = histogram_of_blocks(greedy, budget);
  FiniteQuadraticForm fg = from_blocks(greedy);
  std::vector<Element> fg_all = fg.elements(i64(1) << 40);
  for (const auto& c : candidates) {
    if (brown_of_blocks(c) != br) continue;
    if (histogram_of_blocks(c, budget) != target) continue;
    FiniteQuadraticForm fc = from_blocks(c);
    std::vector<std::vector<Element>> sols;
    std::vector<Element> basis;
    for (std::size_t i = 0; i < fc.rank(); ++i) basis.push_back(fc.unit(i));
    match_bases(fc, basis, fg, fg_all, false, budget, "normal_form", sols);
    if (!sols.empty()) return c;
  }
  (void)f;
  throw InternalError("normal_form: no canonical 2-adic representative matched " + to_string(greedy));
}

std::vector<FormBlock> normal_form_prime(const FiniteQuadraticForm& f, i64 p, WorkBudget& budget) {
  std::vector<FormBlock> greedy = split_prime(f, p, budget);
  if (p != 2) return canonical_odd(greedy, p);
  return canonical_two(f, greedy, budget);
}

}  // namespace

std::vector<FormBlock> orthogonal_blocks(const FiniteQuadraticForm& f, const Limits& limits) {
  WorkBudget budget(limits.max_work);
  std::vector<FormBlock> out;
  for (i64 p : primes_of(f)) {
    std::vector<FormBlock> b = split_prime(f, p, budget);
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FormBlock> normal_form(const FiniteQuadraticForm& f, const Limits& limits) {
  WorkBudget budget(limits.max_work);
  std::vector<FormBlock> out;
  for (i64 p : primes_of(f)) {
    std::vector<FormBlock> b = normal_form_prime(f, p, budget);
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
                                                     const Limits& limits) {
  if (invariant_factors(f) != invariant_factors(g)) return std::nullopt;
  if (f.size() > limits.max_group_order || g.size() > limits.max_group_order)
    throw BoundExceeded("find_isomorphism: form order exceeds bound " + std::to_string(limits.max_group_order));
  WorkBudget budget(limits.max_work);
  std::vector<Element> images(f.rank(), g.zero());
  for (i64 p : primes_of(f)) {
    SubformBasis fp = primary_part(f, p), gp = primary_part(g, p);
    std::vector<Element> fe = p_elements(f, fp, budget), ge = p_elements(g, gp, budget);
    if (histogram_of(f, fe) != histogram_of(g, ge)) return std::nullopt;
    if (p != 2 && canonical_odd(split_prime(f, p, budget), p) != canonical_odd(split_prime(g, p, budget), p))
      return std::nullopt;
    std::vector<std::vector<Element>> sols;
    match_bases(f, fp.basis, g, ge, false, budget, "isomorphism search", sols);
    if (sols.empty()) return std::nullopt;
    // The p-component of generator i is t * h_{p,i} with t the inverse of d_i/p^a mod p^a.
    std::size_t j = 0;
    for (std::size_t i = 0; i < f.rank(); ++i) {
      i64 d = f.orders()[i];
      int a = valuation(d, p);
      if (a == 0) continue;
      i64 pa = ipow(p, a);
      i64 t = inverse_mod(mod(d / pa, pa), pa);
      images[i] = g.add(images[i], g.scale(sols[0][j], t));
      ++j;
    }
  }
  return images;
}

bool is_isomorphic(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g, const Limits& limits) {
  return find_isomorphism(f, g, limits).has_value();
}

AutomorphismGroup automorphisms(const FiniteQuadraticForm& f, const Limits& limits) {
  if (f.size() > limits.max_group_order)
    throw BoundExceeded("automorphisms: form order " + std::to_string(f.size()) + " exceeds bound " +
                        std::to_string(limits.max_group_order));
  AutomorphismGroup out;
  out.order = 1;
  std::vector<std::vector<FormAutomorphism>> per_prime;
  for (i64 p : primes_of(f)) {
    WorkBudget budget(limits.max_work);
    SubformBasis fp = primary_part(f, p);
    std::vector<std::vector<Element>> sols;
    try {
      std::vector<Element> fe = p_elements(f, fp, budget);
      match_bases(f, fp.basis, f, fe, true, budget, "automorphisms", sols);
    } catch (const BoundExceeded& e) {
      throw BoundExceeded("automorphisms: enumeration of the " + std::to_string(p) + "-primary part overflowed (" +
                          e.what() + ")");
    }
    std::vector<FormAutomorphism> list;
    for (const auto& sol : sols) {
      FormAutomorphism a = FormAutomorphism::identity(f);
      std::size_t j = 0;
      for (std::size_t i = 0; i < f.rank(); ++i) {
        i64 d = f.orders()[i];
        int e = valuation(d, p);
        if (e == 0) continue;
        i64 pa = ipow(p, e);
        i64 t = inverse_mod(mod(d / pa, pa), pa);
        Element comp = f.scale(fp.basis[j], t);  // p-component of g_i
        Element rest = f.add(f.unit(i), f.scale(comp, -1));
        a.images[i] = f.add(rest, f.scale(sol[j], t));
        ++j;
      }
      list.push_back(std::move(a));
    }
    out.order *= Int(static_cast<long>(list.size()));
    // Greedy generators: add an element whenever it is outside the group generated so far.
    std::set<std::vector<i64>> generated = {FormAutomorphism::identity(f).key(f)};
    std::vector<FormAutomorphism> gens;
    for (const FormAutomorphism& a : list) {
      if (generated.count(a.key(f))) continue;
      gens.push_back(a);
      // Rebuild the closure from scratch (the groups here are small).
      generated = {FormAutomorphism::identity(f).key(f)};
      std::vector<FormAutomorphism> frontier = {FormAutomorphism::identity(f)};
      while (!frontier.empty()) {
        std::vector<FormAutomorphism> next;
        for (const FormAutomorphism& x : frontier)
          for (const FormAutomorphism& g : gens) {
            budget.spend(1, "automorphisms");
            FormAutomorphism y = g.compose(f, x);
            if (generated.insert(y.key(f)).second) next.push_back(std::move(y));
          }
        frontier = std::move(next);
      }
    }
    out.generators.insert(out.generators.end(), gens.begin(), gens.end());
    per_prime.push_back(std::move(list));
  }
  const Int materialize_cap = 1 << 17;
  if (out.order <= materialize_cap) {
    std::vector<FormAutomorphism> all = {FormAutomorphism::identity(f)};
    for (const auto& list : per_prime) {
      std::vector<FormAutomorphism> next;
      for (const FormAutomorphism& a : all)
        for (const FormAutomorphism& b : list) next.push_back(b.compose(f, a));
      all = std::move(next);
    }
    out.elements = std::move(all);
  }
  return out;
}

DetClass det_p_class(const FiniteQuadraticForm& f, i64 p, const Limits& limits) {
  if (!is_prime(p)) throw DomainError("det_p_class: " + std::to_string(p) + " is not prime");
  DetClass d;
  if (p != 2) {
    WorkBudget budget(limits.max_work);
    for (const FormBlock& b : split_prime(f, p, budget)) d.unit *= legendre(b.num, p);
    return d;
  }
  SubformBasis pp = primary_part(f, 2);
  if (!rank_invariants(pp.form).even) {
    d.defined = false;
    return d;
  }
  i64 u = 1;
  WorkBudget budget(limits.max_work);
  for (const FormBlock& b : normal_form_prime(f, 2, budget)) {
    i64 c = b.kind == FormBlock::Kind::U ? -1 : b.kind == FormBlock::Kind::V ? 3 : b.num;
    u = mod(u * mod(c, 8), 8);
  }
  d.unit = u;
  return d;
}

}  // namespace sextic
