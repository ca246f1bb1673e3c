#include "sextic/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sextic {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Asymmetric: return "asymmetric";
    case Symmetry::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

Perm compose(const Perm& a, const Perm& b) {  // a o b
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<i64>(i);
  return r;
}

Perm identity_perm(i64 n) {
  Perm r(n);
  for (i64 i = 0; i < n; ++i) r[i] = i;
  return r;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, i64 n, WorkBudget& budget) {
  std::vector<Perm> out{identity_perm(n)};
  std::set<Perm> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Perm& g : gens) {
      budget.spend(n, "group closure");
      Perm h = compose(g, out[i]);
      if (seen.insert(h).second) out.push_back(h);
    }
  return out;
}

// Index of sum_j c_j images_j in the target form.
i64 image_index(const FiniteQuadraticForm& target, const std::vector<Element>& images, const Element& c) {
  Element x = target.zero();
  for (std::size_t j = 0; j < c.size(); ++j) x = target.add(x, target.scale(images[j], c[j]));
  return target.index_of(x);
}

Perm perm_of(const FiniteQuadraticForm& f, const FormAutomorphism& a) {
  Perm p(f.size());
  for (i64 i = 0; i < f.size(); ++i) p[i] = image_index(f, a.images, f.element_at(i));
  return p;
}

i64 root_count(const RootComponent& c) {
  i64 n = c.rank;
  switch (c.type) {
    case 'A': return n * (n + 1);
    case 'D': return 2 * n * (n - 1);
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

// Per component, per local discriminant class: the norms |v.v| <= 2 realized in the coset.
class CosetNorms {
 public:
  CosetNorms(const SData& s, const Limits& limits) : s_(s), limits_(limits) {}

  const std::vector<Rat>& norms(std::size_t c, i64 local_index) {
    const RootComponent& comp = s_.sigma.components[c];
    auto& table = cache_[comp];
    if (table.empty()) build(c, table);
    return table[local_index];
  }

  i64 local_index(std::size_t c, const Element& x) const {
    i64 idx = 0;
    for (std::size_t i = s_.gen_count[c]; i-- > 0;) {
      std::size_t g = s_.gen_offset[c] + i;
      idx = idx * s_.form.orders()[g] + x[g];
    }
    return idx;
  }

 private:
  void build(std::size_t c, std::vector<std::vector<Rat>>& table) {
    const RootComponent& comp = s_.sigma.components[c];
    GramLattice pos = negate(make_root_lattice(comp));
    ComponentGenerators cg = component_generators(comp);
    i64 total = 1;
    for (i64 o : cg.orders) total *= o;
    table.assign(total, {});
    for (i64 idx = 0; idx < total; ++idx) {
      RatVec shift(pos.rank(), Rat(0));
      i64 r = idx;
      for (std::size_t i = 0; i < cg.lifts.size(); ++i) {
        i64 e = r % cg.orders[i];
        r /= cg.orders[i];
        for (std::size_t j = 0; j < shift.size(); ++j) shift[j] += Rat(e) * cg.lifts[i][j];
      }
      std::set<Rat> vals;
      for (auto& [v, nv] : coset_vectors(pos, shift, Rat(2), limits_)) vals.insert(nv);
      table[idx].assign(vals.begin(), vals.end());
    }
  }

  const SData& s_;
  Limits limits_;
  std::map<RootComponent, std::vector<std::vector<Rat>>> cache_;
};

// True if some nonzero k in K with trivial h-part has a vector of square -2 in its coset.
bool gains_roots(const SData& s, const std::vector<Element>& kernel_elems, CosetNorms& norms) {
  std::size_t nc = s.sigma.components.size();
  for (const Element& x : kernel_elems) {
    if (x[s.gamma] != 0) continue;
    bool trivial = true;
    std::set<Rat> sums{Rat(0)};
    for (std::size_t c = 0; c < nc && !sums.empty(); ++c) {
      if (s.gen_count[c] == 0) continue;
      i64 li = norms.local_index(c, x);
      if (li == 0) continue;
      trivial = false;
      std::set<Rat> next;
      for (const Rat& a : sums)
        for (const Rat& b : norms.norms(c, li))
          if (a + b <= 2) next.insert(a + b);
      sums.swap(next);
    }
    if (!trivial && sums.count(Rat(2))) return true;
  }
  return false;
}

// Local discriminant class of v/2 for a root v of component c, if v/2 is in the dual.
std::optional<Element> half_root_class(const SData& s, std::size_t c, const IntVec& root) {
  const RootComponent& comp = s.sigma.components[c];
  GramLattice g = make_root_lattice(comp);
  IntVec gv = mul(g.gram(), root);
  for (const Int& x : gv)
    if (x % 2 != 0) return std::nullopt;
  ComponentGenerators cg = component_generators(comp);
  i64 total = 1;
  for (i64 o : cg.orders) total *= o;
  for (i64 idx = 0; idx < total; ++idx) {
    Element local;
    RatVec v(root.size());
    for (std::size_t j = 0; j < root.size(); ++j) v[j] = Rat(-root[j], 2);
    i64 r = idx;
    for (std::size_t i = 0; i < cg.lifts.size(); ++i) {
      i64 e = r % cg.orders[i];
      r /= cg.orders[i];
      local.push_back(e);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(e) * cg.lifts[i][j];
    }
    bool integral = true;
    for (Rat& q : v) {
      q.canonicalize();
      if (q.get_den() != 1) integral = false;
    }
    if (integral) return s.component_element(c, local);
  }
  throw InternalError("half_root_class: v/2 lies in the dual but in no discriminant class");
}

bool violates_half_sum_a1(const SData& s, const Subgroup& k) {
  const FiniteQuadraticForm& f = s.form;
  for (std::size_t c = 0; c < s.sigma.components.size(); ++c) {
    if (s.sigma.components[c] != RootComponent{'A', 1}) continue;
    Element x = f.add(f.unit(s.gen_offset[c]), f.unit(s.gamma));
    if (k.contains(f.index_of(x))) return true;
  }
  return false;
}

bool violates_half_sum_full(const SData& s, const Subgroup& k, const Limits& limits) {
  const FiniteQuadraticForm& f = s.form;
  for (std::size_t c = 0; c < s.sigma.components.size(); ++c) {
    GramLattice pos = negate(make_root_lattice(s.sigma.components[c]));
    for (const IntVec& r : short_vectors(pos, 2, limits)) {
      std::optional<Element> cls = half_root_class(s, c, r);
      if (!cls) continue;
      if (k.contains(f.index_of(f.add(*cls, f.unit(s.gamma))))) return true;
    }
  }
  return false;
}

std::vector<i64> group_invariants(const FiniteQuadraticForm& f, const Subgroup& k) {
  if (k.order() == 1) return {};
  SubformBasis sb = subquotient_basis(f, k.generators, {});
  std::vector<i64> inv = sb.form.orders();
  std::sort(inv.begin(), inv.end());
  return inv;
}

std::size_t sigma_tilde_root_count(const SData& s, const std::vector<Element>& kernel_elems, const Limits& limits) {
  GramLattice sigma = make_root_lattice(s.sigma);
  std::size_t n = sigma.rank();
  std::vector<RatVec> lifts;
  for (const Element& x : kernel_elems) {
    if (x[s.gamma] != 0) continue;
    RatVec v(n, Rat(0));
    for (std::size_t g = 0; g < x.size(); ++g)
      for (std::size_t j = 0; j < n; ++j) v[j] += Rat(x[g]) * s.lifts[g][j];
    lifts.push_back(v);
  }
  if (n == 0) return 0;
  Extension ext = finite_index_extension(sigma, lifts);
  return short_vectors(ext.lattice, -2, limits).size();
}

struct Context {
  SData s;
  std::vector<Element> elems;  // elements of discr S by index
  std::vector<Perm> admissible;
};

Context make_context(const SingularitySet& sigma, const Limits& limits) {
  if (sigma.mu() > 19)
    throw DomainError("total Milnor number " + std::to_string(sigma.mu()) + " exceeds 19");
  Context ctx;
  ctx.s = build_S(sigma);
  const FiniteQuadraticForm& f = ctx.s.form;
  if (f.size() > limits.max_group_order)
    throw BoundExceeded("discriminant of S has order " + std::to_string(f.size()) + " > max-group-order " +
                        std::to_string(limits.max_group_order));
  ctx.elems = f.elements(limits.max_group_order);
  for (const FormAutomorphism& a : admissible_automorphisms(ctx.s, limits).generators)
    ctx.admissible.push_back(perm_of(f, a));
  return ctx;
}

}  // namespace

std::vector<Configuration> configurations(const SingularitySet& sigma, const Limits& limits) {
  Context ctx = make_context(sigma, limits);
  const SData& s = ctx.s;
  const FiniteQuadraticForm& f = s.form;
  CosetNorms norms(s, limits);
  std::vector<Subgroup> all = isotropic_subgroups(f, limits);

  std::vector<Subgroup> good;
  std::map<std::vector<i64>, std::size_t> where;
  for (const Subgroup& k : all) {
    bool a1 = violates_half_sum_a1(s, k);
    if (limits.debug_full_root_check && violates_half_sum_full(s, k, limits) != a1)
      throw InternalError("half-sum condition: the A1 reduction disagrees with the full root check");
    if (a1) continue;
    std::vector<Element> ke;
    for (i64 idx : k.elements) ke.push_back(ctx.elems[idx]);
    if (gains_roots(s, ke, norms)) continue;
    where[k.elements] = good.size();
    good.push_back(k);
  }

  // Orbits under Aut_h, with Schreier generators for the stabilizer of each representative.
  std::vector<Configuration> out;
  std::vector<bool> seen(good.size(), false);
  for (std::size_t start = 0; start < good.size(); ++start) {
    if (seen[start]) continue;
    std::map<std::size_t, Perm> transversal;
    transversal[start] = identity_perm(f.size());
    std::vector<std::size_t> queue{start};
    seen[start] = true;
    std::set<Perm> stab;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t cur = queue[qi];
      const Perm& t = transversal[cur];
      for (const Perm& g : ctx.admissible) {
        std::vector<i64> img;
        for (i64 idx : good[cur].elements) img.push_back(g[idx]);
        std::sort(img.begin(), img.end());
        auto it = where.find(img);
        if (it == where.end())
          throw InternalError("admissible automorphism moved a configuration kernel out of the admissible set");
        Perm gt = compose(g, t);
        std::size_t nxt = it->second;
        if (!seen[nxt]) {
          seen[nxt] = true;
          transversal[nxt] = gt;
          queue.push_back(nxt);
        } else {
          Perm sg = compose(invert(transversal[nxt]), gt);
          if (sg != identity_perm(f.size())) stab.insert(sg);
        }
      }
    }
    const Subgroup& k = good[start];
    Configuration c;
    c.kernel = k;
    c.kernel_invariants = group_invariants(f, k);
    c.index = k.order();
    c.s_tilde = quotient_form(f, k);
    c.orbit_size = queue.size();
    c.stabilizer.assign(stab.begin(), stab.end());
    std::vector<Element> ke;
    for (i64 idx : k.elements) ke.push_back(ctx.elems[idx]);
    c.sigma_tilde_roots = sigma_tilde_root_count(s, ke, limits);
    i64 expected = 0;
    for (const RootComponent& rc : sigma.components) expected += root_count(rc);
    if (static_cast<i64>(c.sigma_tilde_roots) != expected)
      throw InternalError("configuration kernel gains roots although the coset test found none");
    c.reducible = false;
    for (const Element& x : ke)
      if (f.order_of(x) % 2 == 0) c.reducible = true;
    if (zariski_info(sigma)) {
      i64 three = 0;
      for (const Element& x : ke) {
        i64 o = f.order_of(x);
        while (o % 3 == 0) o /= 3;
        if (o == 1) ++three;
      }
      c.abundant = three > 1;
    }
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Configuration& a, const Configuration& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.kernel_invariants != b.kernel_invariants) return a.kernel_invariants < b.kernel_invariants;
    return a.kernel.elements < b.kernel.elements;
  });
  return out;
}

GenusSymbol complement_genus(const SingularitySet& sigma, const Configuration& c) {
  return GenusSymbol{2, 19 - sigma.mu(), negate(c.s_tilde.form)};
}

bool is_reducible(const Configuration& c) { return c.reducible; }

namespace {

// Image of Stab(K) in Aut(discr S~), as permutations of the quotient's elements.
std::vector<Perm> stabilizer_image(const SData& s, const Configuration& c, WorkBudget& budget) {
  const FiniteQuadraticForm& f = s.form;
  const FiniteQuadraticForm& q = c.s_tilde.form;
  std::vector<i64> lift_index(q.size());
  for (i64 e = 0; e < q.size(); ++e) lift_index[e] = image_index(f, c.s_tilde.lifts, q.element_at(e));
  std::vector<Perm> gens;
  for (const Perm& g : c.stabilizer) {
    Perm p(q.size());
    for (i64 e = 0; e < q.size(); ++e) {
      i64 img = c.s_tilde.projection[g[lift_index[e]]];
      if (img < 0) throw InternalError("stabilizer element does not preserve the kernel perp");
      p[e] = img;
    }
    gens.push_back(p);
  }
  return closure(gens, q.size(), budget);
}

struct DoubleCosets {
  std::vector<Perm> reps;
};

DoubleCosets double_cosets(const std::vector<Perm>& group, const std::vector<Perm>& left,
                           const std::vector<Perm>& right, WorkBudget& budget) {
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  std::vector<bool> covered(group.size(), false);
  DoubleCosets out;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (covered[i]) continue;
    out.reps.push_back(group[i]);
    for (const Perm& l : left) {
      Perm lg = compose(l, group[i]);
      for (const Perm& r : right) {
        budget.spend(static_cast<i64>(lg.size()), "double coset enumeration");
        auto it = index.find(compose(lg, r));
        if (it == index.end()) throw InternalError("double coset left the automorphism group");
        covered[it->second] = true;
      }
    }
  }
  return out;
}

std::vector<Perm> automorphism_perms(const FiniteQuadraticForm& q, const Limits& limits) {
  AutomorphismGroup ag = automorphisms(q, limits);
  if (ag.elements.empty() && ag.order > 1)
    throw BoundExceeded("automorphism group of discr S~ (order " + ag.order.get_str() + ") is too large to list");
  std::vector<Perm> out;
  for (const FormAutomorphism& a : ag.elements) out.push_back(perm_of(q, a));
  if (out.empty()) out.push_back(identity_perm(q.size()));
  return out;
}

void definite_types(const SData& s, ConfigurationReport& r, const Limits& limits) {
  const Configuration& c = r.config;
  const FiniteQuadraticForm& q = c.s_tilde.form;
  WorkBudget budget(limits.max_work);
  FiniteQuadraticForm target = negate(q);
  r.complement.representatives = enumerate_genus(target, limits);
  if (r.complement.representatives.empty() != !r.complement.existence.exists)
    throw InternalError("existence criterion and rank-2 genus enumeration disagree for " + r.complement.genus.str());
  if (r.complement.representatives.empty()) return;
  std::vector<Perm> aut = automorphism_perms(q, limits);
  std::vector<Perm> h1 = stabilizer_image(s, c, budget);
  std::set<Perm> h1set(h1.begin(), h1.end());
  for (const ReducedForm& m : r.complement.representatives) {
    DiscriminantData dn = discriminant_form(m.lattice());
    auto kappa_images = find_isomorphism(target, dn.form, limits);
    if (!kappa_images) throw InternalError("no anti-isometry onto discr " + m.str());
    Perm kappa(q.size());
    for (i64 e = 0; e < q.size(); ++e) kappa[e] = image_index(dn.form, *kappa_images, q.element_at(e));
    Perm kinv = invert(kappa);
    std::vector<Perm> h2, disorienting;
    for (const IntMat& t : orthogonal_group_elements(m)) {
      Perm tn = perm_of(dn.form, discriminant_action(dn, t));
      Perm d = compose(kinv, compose(tn, kappa));
      h2.push_back(d);
      if (orientation_character(m.lattice(), t) < 0) disorienting.push_back(d);
    }
    DoubleCosets dc = double_cosets(aut, h2, h1, budget);
    for (std::size_t i = 0; i < dc.reps.size(); ++i) {
      const Perm& g = dc.reps[i];
      Perm ginv = invert(g);
      bool full = false;
      for (const Perm& d : disorienting)
        if (h1set.count(compose(ginv, compose(d, g)))) full = true;
      HomologicalType t;
      t.complement = m.str();
      t.coset_id = static_cast<int>(i);
      t.symmetry = full ? Symmetry::Symmetric : Symmetry::Asymmetric;
      if (m.a == 1) {
        if (!full) throw InternalError("a complement with a square-2 vector gave an asymmetric type");
        t.reason = "complement has a vector of square 2";
      } else if (full) {
        t.reason = "a disorienting isometry of the complement matches an admissible automorphism";
      } else if (disorienting.empty()) {
        t.reason = "the complement has no disorienting isometry";
      } else {
        t.reason = "no disorienting isometry of the complement matches an admissible automorphism";
      }
      r.types.push_back(t);
    }
  }
  r.types_low = r.types_high = static_cast<i64>(r.types.size());
  for (const HomologicalType& t : r.types) {
    i64 k = t.symmetry == Symmetry::Symmetric ? 1 : 2;
    r.classes_low += k;
    r.classes_high += k;
  }
}

void indefinite_types(const SData& s, const SingularitySet& sigma, ConfigurationReport& r, const Limits& limits) {
  const Configuration& c = r.config;
  const GenusSymbol& g = r.complement.genus;
  if (!r.complement.existence.exists) return;
  r.complement.fast_path = rank_invariants(c.s_tilde.form).ell + sigma.mu() <= 19;
  r.complement.uniqueness = unique_in_genus(g, limits);
  r.complement.onto = aut_onto(g, limits);
  bool square_two = guaranteed_square_two(g);
  if (r.complement.fast_path && (r.complement.onto->verdict != Onto::UniqueAndOnto || !square_two))
    throw InternalError("l(S~) + mu <= 19 but the surjectivity or square-2 criterion failed");
  HomologicalType t;
  t.complement = "genus";
  t.symmetry = square_two ? Symmetry::Symmetric : Symmetry::Undetermined;
  t.reason = square_two ? "rk >= l + 2 on an indefinite genus forces a vector of square 2"
                        : "no criterion decides the symmetry";
  i64 per = square_two ? 1 : 2;
  if (r.complement.onto->verdict == Onto::UniqueAndOnto) {
    t.coset_id = 0;
    r.types.push_back(t);
    r.types_low = r.types_high = 1;
    r.classes_low = 1;
    r.classes_high = per;
    return;
  }
  // The number of double cosets is unknown; bound it by the cosets of <-id> x image of Stab(K).
  r.types.push_back(t);
  r.types_low = 1;
  r.types_high = -1;
  if (r.complement.uniqueness->verdict == Uniqueness::Unique) {
    try {
      WorkBudget budget(limits.max_work);
      const FiniteQuadraticForm& q = c.s_tilde.form;
      std::vector<Perm> aut = automorphism_perms(q, limits);
      std::vector<Perm> h1 = stabilizer_image(s, c, budget);
      Perm minus(q.size());
      for (i64 e = 0; e < q.size(); ++e) minus[e] = q.index_of(q.scale(q.element_at(e), -1));
      std::vector<Perm> left{identity_perm(q.size()), minus};
      r.types_high = static_cast<i64>(double_cosets(aut, left, h1, budget).reps.size());
    } catch (const BoundExceeded&) {
      r.types_high = -1;
    }
  }
  r.classes_low = 1;
  r.classes_high = r.types_high < 0 ? -1 : per * r.types_high;
}

void check_abundant_structure(const SData& s, const Configuration& c) {
  if (!c.abundant || !*c.abundant) return;
  const FiniteQuadraticForm& f = s.form;
  std::vector<Element> three;
  for (i64 idx : c.kernel.elements) {
    Element x = f.element_at(idx);
    i64 o = f.order_of(x);
    while (o % 3 == 0) o /= 3;
    if (o == 1 && idx != 0) three.push_back(x);
  }
  if (three.size() != 2)
    throw InternalError("abundant configuration whose 3-primary kernel is not cyclic of order 3");
  for (std::size_t comp = 0; comp < s.sigma.components.size(); ++comp) {
    if (s.sigma.components[comp] == RootComponent{'A', 1}) continue;
    bool nonzero = false;
    for (std::size_t i = 0; i < s.gen_count[comp]; ++i)
      if (three[0][s.gen_offset[comp] + i] != 0) nonzero = true;
    if (!nonzero)
      throw InternalError("abundant kernel generator misses the singular point " + s.sigma.components[comp].str());
  }
}

}  // namespace

ConfigurationReport analyze_configuration(const SingularitySet& sigma, const Configuration& c, const Limits& limits) {
  SData s = build_S(sigma);
  ConfigurationReport r;
  r.config = c;
  r.complement.genus = complement_genus(sigma, c);
  r.complement.existence = exists_even_lattice(r.complement.genus, limits);
  if (sigma.mu() == 19) {
    r.complement.definite = true;
    definite_types(s, r, limits);
  } else {
    indefinite_types(s, sigma, r, limits);
  }
  if (r.classes_high != 0) check_abundant_structure(s, c);
  return r;
}

ClassificationReport rigid_isotopy_classes(const SingularitySet& sigma, const Limits& limits) {
  ClassificationReport rep;
  rep.sigma = sigma;
  rep.zariski = zariski_info(sigma);
  for (const Configuration& c : configurations(sigma, limits)) {
    ConfigurationReport r = analyze_configuration(sigma, c, limits);
    if (!r.complement.existence.exists) {
      ++rep.unrealizable;
      continue;
    }
    rep.class_low += r.classes_low;
    if (rep.class_high >= 0) rep.class_high = r.classes_high < 0 ? -1 : rep.class_high + r.classes_high;
    rep.configurations.push_back(std::move(r));
  }
  return rep;
}

std::optional<ZariskiShape> zariski_info(const SingularitySet& sigma) {
  ZariskiShape z;
  for (const RootComponent& c : sigma.components) {
    if (c.type == 'E' && c.rank == 6) {
      ++z.e;
    } else if (c.type == 'A' && c.rank == 1) {
      ++z.n;
    } else if (c.type == 'A' && (c.rank + 1) % 3 == 0 && (c.rank + 1) / 3 <= 6) {
      ++z.a[(c.rank + 1) / 3];
    } else {
      return std::nullopt;
    }
  }
  int weight = 2 * z.e;
  for (int i = 1; i <= 6; ++i) weight += i * z.a[i];
  if (weight != 6) return std::nullopt;
  z.virtual_genus = 10 - 3 * z.e - z.n;
  for (int i = 1; i <= 6; ++i) z.virtual_genus -= z.a[i] * ((3 * i) / 2);
  return z;
}

std::string ZariskiShape::str() const {
  std::ostringstream os;
  os << "e=" << e;
  for (int i = 1; i <= 6; ++i)
    if (a[i]) os << ", a" << i << "=" << a[i];
  os << ", n=" << n;
  return os.str();
}

namespace {

std::string interval(i64 lo, i64 hi) {
  if (lo == hi) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + (hi < 0 ? std::string("unbounded") : std::to_string(hi)) + "]";
}

std::string invariants_str(const std::vector<i64>& inv) {
  if (inv.empty()) return "0";
  std::string s;
  for (i64 d : inv) s += (s.empty() ? "Z/" : " + Z/") + std::to_string(d);
  return s;
}

}  // namespace

std::string format_report(const ClassificationReport& r) {
  std::ostringstream os;
  os << "Singularities: " << r.sigma.str() << " (mu = " << r.sigma.mu() << ")\n";
  if (r.zariski)
    os << "Classical Zariski shape: " << r.zariski->str() << "; virtual genus (floor convention) "
       << r.zariski->virtual_genus << "\n";
  os << "Configurations: " << r.configurations.size();
  if (r.unrealizable) os << " (" << r.unrealizable << " further kernel orbit(s) have an empty complement genus)";
  os << "\n";
  for (std::size_t i = 0; i < r.configurations.size(); ++i) {
    const ConfigurationReport& c = r.configurations[i];
    os << "[" << i + 1 << "] kernel " << invariants_str(c.config.kernel_invariants) << ", index "
       << c.config.index << ", discr S~ = " << c.config.s_tilde.form.str() << ", orbit " << c.config.orbit_size
       << ", " << (c.config.reducible ? "reducible" : "irreducible");
    if (c.config.abundant) os << ", " << (*c.config.abundant ? "abundant" : "not abundant");
    os << "\n    complement genus " << c.complement.genus.str() << ": ";
    if (!c.complement.existence.exists) {
      os << "empty (" << c.complement.existence.failed << " fails)\n";
    } else if (c.complement.definite) {
      for (std::size_t j = 0; j < c.complement.representatives.size(); ++j)
        os << (j ? ", " : "") << c.complement.representatives[j].str();
      os << "\n";
    } else {
      os << "uniqueness " << to_string(c.complement.uniqueness->verdict) << ", surjectivity "
         << to_string(c.complement.onto->verdict) << (c.complement.fast_path ? ", l(S~) + mu <= 19" : "") << "\n";
    }
    for (const HomologicalType& t : c.types) {
      os << "    type: N = " << t.complement;
      if (t.coset_id >= 0) os << ", coset " << t.coset_id;
      os << ", " << to_string(t.symmetry) << " (" << t.reason << ")\n";
    }
    if (c.types_low != c.types_high) os << "    number of types: " << interval(c.types_low, c.types_high) << "\n";
    os << "    classes: " << interval(c.classes_low, c.classes_high) << "\n";
  }
  os << "Rigid isotopy classes: " << interval(r.class_low, r.class_high) << "\n";
  return os.str();
}

}  // namespace sextic
