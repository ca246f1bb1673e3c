#include "sextic/nikulin.hpp"

#include <map>

namespace sextic {

std::string GenusSymbol::str() const {
  return "(" + std::to_string(sigma_plus) + "," + std::to_string(sigma_minus) + "; " + form.str() + ")";
}

std::string to_string(Uniqueness u) { return u == Uniqueness::Unique ? "unique" : "unknown"; }
std::string to_string(Onto o) { return o == Onto::UniqueAndOnto ? "unique_and_onto" : "unknown"; }

namespace {

// The part of |f| prime to p.
i64 cofactor(const FiniteQuadraticForm& f, i64 p) {
  i64 n = f.size();
  while (n % p == 0) n /= p;
  return n;
}

i64 mod8(i64 x) { return ((x % 8) + 8) % 8; }

struct PrimaryElements {
  FiniteQuadraticForm form;
  std::vector<Element> elems;
  std::vector<i64> order;
};

PrimaryElements primary_elements(const FiniteQuadraticForm& f, i64 p, const Limits& limits) {
  PrimaryElements pe;
  pe.form = primary_part(f, p).form;
  if (pe.form.size() > limits.max_group_order)
    throw BoundExceeded("summand search: the " + std::to_string(p) + "-part has order " +
                        std::to_string(pe.form.size()) + " > max-group-order");
  pe.elems = pe.form.elements(limits.max_group_order);
  for (const Element& x : pe.elems) pe.order.push_back(pe.form.order_of(x));
  return pe;
}

// N b(x,y) scaled into Z/N: b has exact order d iff d*s = 0 mod N and (d/2)*s != 0 mod N.
bool exact_order2(i64 s, i64 d, i64 N) {
  return static_cast<__int128>(s) * d % N == 0 && (d == 1 || static_cast<__int128>(s) * (d / 2) % N != 0);
}

bool divisible(i64 s, i64 d, i64 N) { return static_cast<__int128>(s) * d % N == 0; }

}  // namespace

bool has_equal_scale_pair(const FiniteQuadraticForm& f, i64 p, const Limits& limits) {
  if (p == 2) throw DomainError("has_equal_scale_pair: p must be odd");
  std::map<i64, int> per_scale;
  for (const FormBlock& b : orthogonal_blocks(primary_part(f, p).form, limits))
    if (++per_scale[b.den] >= 2) return true;
  return false;
}

bool has_hyperbolic_summand(const FiniteQuadraticForm& f, int k, const Limits& limits) {
  PrimaryElements pe = primary_elements(f, 2, limits);
  const FiniteQuadraticForm& g = pe.form;
  if (g.trivial()) return false;
  i64 N = g.exponent();
  WorkBudget budget(limits.max_work);
  // Candidates: order 2^j with b(x,x) in 2^{1-j} Z.
  std::map<i64, std::vector<std::size_t>> cand;
  for (std::size_t i = 0; i < pe.elems.size(); ++i) {
    i64 d = pe.order[i];
    if (d == 1 || (k > 0 && d != (i64(1) << k))) continue;
    if (divisible(g.b_scaled(pe.elems[i], pe.elems[i]), d / 2, N)) cand[d].push_back(i);
  }
  for (auto& [d, list] : cand)
    for (std::size_t a = 0; a < list.size(); ++a) {
      budget.spend(static_cast<i64>(list.size() - a), "hyperbolic summand search");
      for (std::size_t b = a + 1; b < list.size(); ++b)
        if (exact_order2(g.b_scaled(pe.elems[list[a]], pe.elems[list[b]]), d, N)) return true;
    }
  return false;
}

bool has_adjacent_cyclic_pair(const FiniteQuadraticForm& f, const Limits& limits) {
  PrimaryElements pe = primary_elements(f, 2, limits);
  const FiniteQuadraticForm& g = pe.form;
  if (g.trivial()) return false;
  i64 N = g.exponent();
  WorkBudget budget(limits.max_work);
  // Elements generating a nondegenerate cyclic subform: b(x,x) of exact order ord(x).
  std::map<i64, std::vector<std::size_t>> cyc;
  for (std::size_t i = 0; i < pe.elems.size(); ++i) {
    i64 d = pe.order[i];
    if (d > 1 && exact_order2(g.b_scaled(pe.elems[i], pe.elems[i]), d, N)) cyc[d].push_back(i);
  }
  for (auto& [d, xs] : cyc) {
    auto it = cyc.find(2 * d);
    if (it == cyc.end()) continue;
    for (std::size_t x : xs) {
      budget.spend(static_cast<i64>(it->second.size()), "cyclic pair search");
      for (std::size_t y : it->second)
        if (g.b_scaled(pe.elems[x], pe.elems[y]) == 0) return true;
    }
  }
  return false;
}

ExistenceVerdict exists_even_lattice(const GenusSymbol& g, const Limits& limits) {
  ExistenceVerdict v;
  const FiniteQuadraticForm& f = g.form;
  RankInvariants ri = rank_invariants(f);
  int rk = g.rank();
  auto add = [&](std::string id, bool holds, std::string detail) {
    if (!holds && v.failed.empty()) v.failed = id;
    v.conditions.push_back({std::move(id), holds, std::move(detail)});
  };
  bool c1 = g.sigma_plus >= 0 && g.sigma_minus >= 0 && rk >= ri.ell;
  add("existence(1)", c1, "rank " + std::to_string(rk) + ", l = " + std::to_string(ri.ell));
  int br = brown_gauss(f, limits);
  int sig = static_cast<int>(mod(g.sigma_plus - g.sigma_minus, 8));
  add("existence(2)", sig == br,
      "signature " + std::to_string(sig) + " mod 8, Br = " + std::to_string(br));
  for (i64 p : primes_of(f)) {
    if (p == 2) continue;
    std::string id = "existence(3) p=" + std::to_string(p);
    int lp = ri.ell_at(p);
    if (rk > lp) {
      add(id, true, "rank " + std::to_string(rk) + " > l_p = " + std::to_string(lp));
      continue;
    }
    v.det_condition_decisive = true;
    DetClass dc = det_p_class(f, p, limits);
    i64 m = cofactor(f, p) * (g.sigma_minus % 2 == 0 ? 1 : -1);
    int expected = legendre(m, p);
    add(id, dc.unit == expected,
        "det_p class " + std::to_string(dc.unit) + ", required class of " + std::to_string(m) + " = " +
            std::to_string(expected));
  }
  {
    std::string id = "existence(4)";
    int l2 = ri.ell_at(2);
    if (rk > l2) {
      add(id, true, "rank " + std::to_string(rk) + " > l_2 = " + std::to_string(l2));
    } else {
      DetClass dc = det_p_class(f, 2, limits);
      if (!dc.defined) {
        add(id, true, "2-adic part is odd");
      } else {
        v.det_condition_decisive = true;
        i64 m = cofactor(f, 2);
        i64 r = mod8(dc.unit * m);
        add(id, r == 1 || r == 7,
            "det_2 class " + std::to_string(dc.unit) + " against +-" + std::to_string(m) + " mod 8");
      }
    }
  }
  v.exists = v.failed.empty();
  return v;
}

namespace {

void require_indefinite(const GenusSymbol& g, const char* what) {
  if (!g.indefinite() || g.rank() < 3)
    throw DomainError(std::string(what) + ": requires an indefinite genus of rank >= 3, got " + g.str());
}

}  // namespace

UniquenessVerdict unique_in_genus(const GenusSymbol& g, const Limits& limits) {
  require_indefinite(g, "unique_in_genus");
  UniquenessVerdict v;
  RankInvariants ri = rank_invariants(g.form);
  int rk = g.rank();
  bool all = true;
  for (i64 p : primes_of(g.form)) {
    if (p == 2) continue;
    int lp = ri.ell_at(p);
    std::string id = "uniqueness(1) p=" + std::to_string(p);
    if (rk >= lp + 2) {
      v.conditions.push_back({id, true, "rank >= l_p + 2"});
    } else if (has_equal_scale_pair(g.form, p, limits)) {
      v.conditions.push_back({id, true, "two cyclic blocks of equal scale"});
    } else {
      v.conditions.push_back({id, false, "rank " + std::to_string(rk) + " < l_p + 2 and no equal-scale pair"});
      all = false;
    }
  }
  int l2 = ri.ell_at(2);
  if (rk >= l2 + 2) {
    v.conditions.push_back({"uniqueness(2)", true, "rank >= l_2 + 2"});
  } else if (has_hyperbolic_summand(g.form, 0, limits)) {
    v.conditions.push_back({"uniqueness(2)", true, "U or V summand"});
  } else if (has_adjacent_cyclic_pair(g.form, limits)) {
    v.conditions.push_back({"uniqueness(2)", true, "<a/2^k>+<b/2^(k+1)> summand"});
  } else {
    v.conditions.push_back({"uniqueness(2)", false, "rank < l_2 + 2 and no qualifying 2-adic summand"});
    all = false;
  }
  v.verdict = all ? Uniqueness::Unique : Uniqueness::Unknown;
  return v;
}

OntoVerdict aut_onto(const GenusSymbol& g, const Limits& limits) {
  require_indefinite(g, "aut_onto");
  OntoVerdict v;
  RankInvariants ri = rank_invariants(g.form);
  int rk = g.rank();
  bool all = true;
  for (i64 p : primes_of(g.form)) {
    if (p == 2) continue;
    int lp = ri.ell_at(p);
    bool ok = rk >= lp + 2;
    v.conditions.push_back({"onto(1) p=" + std::to_string(p), ok,
                            "rank " + std::to_string(rk) + ", l_p = " + std::to_string(lp)});
    all = all && ok;
  }
  int l2 = ri.ell_at(2);
  if (rk >= l2 + 2) {
    v.conditions.push_back({"onto(2)", true, "rank >= l_2 + 2"});
  } else if (has_hyperbolic_summand(g.form, 1, limits)) {
    v.conditions.push_back({"onto(2)", true, "U_2 or V_2 summand"});
  } else {
    v.conditions.push_back({"onto(2)", false, "rank < l_2 + 2 and no U_2/V_2 summand"});
    all = false;
  }
  v.verdict = all ? Onto::UniqueAndOnto : Onto::Unknown;
  return v;
}

bool guaranteed_square_two(const GenusSymbol& g) {
  return g.indefinite() && g.rank() >= rank_invariants(g.form).ell + 2;
}

}  // namespace sextic
