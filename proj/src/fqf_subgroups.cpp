#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "sextic/fqf.hpp"
#include "sextic/matrix.hpp"

namespace sextic {

namespace {

// Sorted indices of the subgroup spanned by `base` (indices) and x.
std::vector<i64> extend_span(const FiniteQuadraticForm& f, const std::vector<i64>& base, const Element& x) {
  i64 ox = f.order_of(x);
  std::unordered_set<i64> seen(base.begin(), base.end());
  std::vector<i64> out = base;
  Element m = x;
  for (i64 t = 1; t < ox; ++t) {
    if (seen.count(f.index_of(m))) break;
    for (i64 h : base) {
      i64 idx = f.index_of(f.add(f.element_at(h), m));
      if (seen.insert(idx).second) out.push_back(idx);
    }
    m = f.add(m, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVec lift(const Element& x) {
  IntVec v;
  for (i64 c : x) v.emplace_back(static_cast<long>(c));
  return v;
}

}  // namespace

Subgroup subgroup_generated(const FiniteQuadraticForm& f, const std::vector<Element>& gens) {
  Subgroup s;
  s.elements = {0};
  for (const Element& g : gens) {
    Element r = f.reduce(g);
    if (s.contains(f.index_of(r))) continue;
    s.generators.push_back(r);
    s.elements = extend_span(f, s.elements, r);
  }
  return s;
}

bool is_isotropic(const FiniteQuadraticForm& f, const Subgroup& k) {
  for (const Element& g : k.generators)
    if (f.q_scaled(g) != 0) return false;
  for (std::size_t i = 0; i < k.generators.size(); ++i)
    for (std::size_t j = i + 1; j < k.generators.size(); ++j)
      if (f.b_scaled(k.generators[i], k.generators[j]) != 0) return false;
  return true;
}

SubformBasis subquotient_basis(const FiniteQuadraticForm& f, const std::vector<Element>& a_gens,
                               const std::vector<Element>& b_gens) {
  std::size_t n = f.rank();
  SubformBasis out;
  if (n == 0) return out;
  IntMat a_rows, b_rows;
  for (const Element& g : a_gens) a_rows.push_back(lift(g));
  for (const Element& g : b_gens) b_rows.push_back(lift(g));
  for (std::size_t i = 0; i < n; ++i) {
    IntVec r(n, Int(0));
    r[i] = Int(static_cast<long>(f.orders()[i]));
    a_rows.push_back(r);
    b_rows.push_back(r);
  }
  IntMat ha = hnf_rows(a_rows);
  if (ha.size() != n) throw InternalError("subquotient_basis: lattice is not of full rank");
  RatMat ha_inv = inverse(to_rat(ha));
  IntMat coeffs;
  for (const IntVec& row : b_rows) {
    IntVec c(n, Int(0));
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k) s += Rat(row[k]) * ha_inv[k][j];
      if (s.get_den() != 1) throw DomainError("subquotient_basis: B is not contained in A");
      c[j] = s.get_num();
    }
    coeffs.push_back(c);
  }
  SmithForm snf = smith_normal_form(coeffs);
  IntMat vinv = unimodular_inverse(snf.V);
  IntMat basis = mul(vinv, ha);
  std::vector<i64> orders;
  for (std::size_t i = 0; i < n; ++i) {
    i64 s = to_i64(snf.diagonal[i]);
    if (s == 1) continue;
    if (s == 0) throw InternalError("subquotient_basis: infinite quotient");
    Element e(n);
    for (std::size_t j = 0; j < n; ++j) {
      Int r = basis[i][j] % Int(static_cast<long>(f.orders()[j]));
      e[j] = mod(to_i64(r), f.orders()[j]);
    }
    out.basis.push_back(e);
    orders.push_back(s);
  }
  out.form = b_gens.empty() ? induced_form(f, out.basis, orders) : FiniteQuadraticForm();
  if (!b_gens.empty()) {
    // The pairing is only well defined on A/B when B is isotropic and A lies in its perp;
    // callers building quotient forms do that themselves.
    std::vector<std::vector<i64>> raw(orders.size(), std::vector<i64>(orders.size(), 0));
    i64 M = 1;
    for (i64 d : orders) M = lcm64(M, d);
    out.form = FiniteQuadraticForm(orders, raw, M);
  }
  return out;
}

Subgroup subgroup_perp(const FiniteQuadraticForm& f, const Subgroup& k) {
  std::vector<Element> gens;
  std::vector<i64> span = {0};
  i64 n = f.size();
  for (i64 idx = 0; idx < n; ++idx) {
    if (std::binary_search(span.begin(), span.end(), idx)) continue;
    Element x = f.element_at(idx);
    bool ok = true;
    for (const Element& g : k.generators)
      if (f.b_scaled(x, g) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    gens.push_back(x);
    span = extend_span(f, span, x);
  }
  Subgroup s;
  s.generators = gens;
  s.elements = span;
  if (static_cast<i64>(span.size()) * k.order() != n)
    throw InternalError("subgroup_perp: |K perp| * |K| != |form|");
  return s;
}

QuotientForm quotient_form(const FiniteQuadraticForm& f, const Subgroup& k) {
  if (!is_isotropic(f, k)) throw DomainError("quotient_form: kernel is not isotropic");
  Subgroup perp = subgroup_perp(f, k);
  SubformBasis sq = subquotient_basis(f, perp.generators, k.generators);
  std::vector<i64> orders = sq.form.orders();
  QuotientForm out;
  out.lifts = sq.basis;
  out.form = induced_form(f, sq.basis, orders);
  i64 qsize = out.form.size();
  if (qsize * k.order() * k.order() != f.size()) throw InternalError("quotient_form: order bookkeeping failed");
  out.projection.assign(f.size(), -1);
  std::vector<Element> kel;
  for (i64 idx : k.elements) kel.push_back(f.element_at(idx));
  for (i64 qi = 0; qi < qsize; ++qi) {
    Element c = out.form.element_at(qi);
    Element x = f.zero();
    for (std::size_t j = 0; j < c.size(); ++j) x = f.add(x, f.scale(out.lifts[j], c[j]));
    for (const Element& e : kel) {
      i64 idx = f.index_of(f.add(x, e));
      if (out.projection[idx] != -1) throw InternalError("quotient_form: cosets overlap");
      out.projection[idx] = qi;
    }
  }
  return out;
}

std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticForm& f, const Limits& limits) {
  i64 n = f.size();
  if (n > limits.max_group_order)
    throw BoundExceeded("isotropic_subgroups: form of order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(limits.max_group_order));
  WorkBudget budget(limits.max_work);
  // Per prime: all isotropic subgroups of the primary part, by closure under adding elements.
  std::vector<std::vector<Subgroup>> per_prime;
  for (i64 p : primes_of(f)) {
    SubformBasis pp = primary_part(f, p);
    std::vector<Element> iso;
    for (i64 i = 1; i < pp.form.size(); ++i) {
      Element c = pp.form.element_at(i);
      Element x = f.zero();
      for (std::size_t j = 0; j < c.size(); ++j) x = f.add(x, f.scale(pp.basis[j], c[j]));
      if (f.q_scaled(x) == 0) iso.push_back(x);
    }
    std::map<std::vector<i64>, Subgroup> found;
    Subgroup triv;
    triv.elements = {0};
    found[triv.elements] = triv;
    std::vector<Subgroup> frontier = {triv};
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const Subgroup& h : frontier) {
        for (const Element& x : iso) {
          budget.spend(1, "isotropic_subgroups");
          if (h.contains(f.index_of(x))) continue;
          bool ok = true;
          for (const Element& g : h.generators)
            if (f.b_scaled(x, g) != 0) {
              ok = false;
              break;
            }
          if (!ok) continue;
          std::vector<i64> el = extend_span(f, h.elements, x);
          budget.spend(static_cast<i64>(el.size()), "isotropic_subgroups");
          if (found.count(el)) continue;
          Subgroup s;
          s.generators = h.generators;
          s.generators.push_back(x);
          s.elements = el;
          found[el] = s;
          next.push_back(s);
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> list;
    for (auto& [key, s] : found) list.push_back(s);
    per_prime.push_back(std::move(list));
  }
  std::vector<Subgroup> result;
  Subgroup triv;
  triv.elements = {0};
  result.push_back(triv);
  for (const auto& list : per_prime) {
    std::vector<Subgroup> combined;
    for (const Subgroup& a : result)
      for (const Subgroup& b : list) {
        std::vector<Element> gens = a.generators;
        gens.insert(gens.end(), b.generators.begin(), b.generators.end());
        budget.spend(a.order() * b.order(), "isotropic_subgroups");
        combined.push_back(subgroup_generated(f, gens));
      }
    result = std::move(combined);
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return result;
}

}  // namespace sextic
