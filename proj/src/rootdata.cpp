#include "sextic/rootdata.hpp"

#include <algorithm>
#include <cctype>

namespace sextic {

int SingularitySet::mu() const {
  int m = 0;
  for (const RootComponent& c : components) m += c.rank;
  return m;
}

RootComponent parse_component(const std::string& text) {
  if (text.size() < 2) throw DomainError("invalid singularity '" + text + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string digits = text.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("invalid singularity '" + text + "'");
  if (digits.size() > 6) throw DomainError("singularity rank too large in '" + text + "'");
  int n = std::stoi(digits);
  RootComponent c{t, n};
  bool ok = (t == 'A' && n >= 1) || (t == 'D' && n >= 4) || (t == 'E' && n >= 6 && n <= 8);
  if (!ok) throw DomainError("invalid singularity '" + text + "' (expected A_p p>=1, D_q q>=4 or E6/E7/E8)");
  return c;
}

SingularitySet make_singularity_set(std::vector<RootComponent> comps) {
  std::sort(comps.begin(), comps.end());
  return SingularitySet{std::move(comps)};
}

SingularitySet parse_singularities(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<RootComponent> comps;
  if (s.empty() || s == "0") return {};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (term.empty()) throw DomainError("empty term in singularity set '" + text + "'");
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    int mult = 1;
    if (k > 0) {
      if (k > 3) throw DomainError("multiplicity too large in '" + term + "'");
      mult = std::stoi(term.substr(0, k));
      if (mult < 1) throw DomainError("multiplicity must be positive in '" + term + "'");
    }
    std::string body = term.substr(k);
    if (!body.empty() && body[0] == '*') body = body.substr(1);
    RootComponent c = parse_component(body);
    for (int i = 0; i < mult; ++i) comps.push_back(c);
    if (plus == std::string::npos) break;
    pos = plus + 1;
    if (pos == s.size()) throw DomainError("trailing '+' in singularity set");
  }
  return make_singularity_set(comps);
}

GramLattice make_root_lattice(const RootComponent& c) {
  int n = c.rank;
  std::vector<std::pair<int, int>> edges;  // 1-based
  switch (c.type) {
    case 'A':
      for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 2, n});
      break;
    case 'E':
      if (n == 6) {
        edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
      } else {
        edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
        for (int i = 5; i < n; ++i) edges.push_back({i, i + 1});
      }
      break;
    default:
      throw DomainError("invalid root system type");
  }
  IntMat g = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) g[a - 1][b - 1] = g[b - 1][a - 1] = 1;
  return GramLattice(g);
}

GramLattice make_root_lattice(const SingularitySet& s) {
  GramLattice out;
  for (const RootComponent& c : s.components) out = direct_sum(out, make_root_lattice(c));
  return out;
}

std::vector<FormBlock> discriminant_table(const RootComponent& c) {
  int n = c.rank;
  switch (c.type) {
    case 'A':
      return {FormBlock::cyclic(-n, n + 1)};
    case 'D':
      if (n % 2 == 1) return {FormBlock::cyclic(-n, 4)};
      if (n % 8 == 6) return {FormBlock::cyclic(1, 2), FormBlock::cyclic(1, 2)};
      if (n % 8 == 2) return {FormBlock::cyclic(-1, 2), FormBlock::cyclic(-1, 2)};
      if (n % 8 == 0) return {FormBlock::u(1)};
      return {FormBlock::v(1)};
    case 'E':
      if (n == 6) return {FormBlock::cyclic(2, 3)};
      if (n == 7) return {FormBlock::cyclic(1, 2)};
      return {};
  }
  throw DomainError("invalid root system type");
}

namespace {

RatVec weight(const GramLattice& g, std::size_t i) {
  RatMat inv = inverse(to_rat(g.gram()));
  RatVec w(g.rank());
  for (std::size_t r = 0; r < g.rank(); ++r) w[r] = inv[r][i];
  return w;
}

i64 class_order(const RatVec& v) {
  Int d = 1;
  for (const Rat& x : v) d = lcm(d, Int(x.get_den()));
  return to_i64(d);
}

}  // namespace

ComponentGenerators component_generators(const RootComponent& c) {
  GramLattice g = make_root_lattice(c);
  ComponentGenerators out;
  auto add = [&](std::size_t i) {
    RatVec w = weight(g, i);
    out.lifts.push_back(w);
    out.orders.push_back(class_order(w));
  };
  int n = c.rank;
  switch (c.type) {
    case 'A':
      add(0);
      break;
    case 'D':
      if (n % 2 == 1) {
        add(n - 1);
      } else {
        add(n - 2);
        add(n - 1);
      }
      break;
    case 'E': {
      i64 full = n == 6 ? 3 : n == 7 ? 2 : 1;
      if (full == 1) break;
      for (int i = 0; i < n; ++i)
        if (class_order(weight(g, i)) == full) {
          add(i);
          break;
        }
      break;
    }
  }
  return out;
}

Element SData::component_element(std::size_t c, const Element& local) const {
  Element x = form.zero();
  for (std::size_t i = 0; i < gen_count[c]; ++i) x[gen_offset[c] + i] = local[i];
  return form.reduce(x);
}

SData build_S(const SingularitySet& s) {
  SData out;
  out.sigma = s;
  std::size_t coord = 0;
  std::vector<i64> orders;
  std::vector<std::pair<std::size_t, RatVec>> local;  // (offset, lift)
  for (const RootComponent& c : s.components) {
    GramLattice g = make_root_lattice(c);
    ComponentGenerators cg = component_generators(c);
    out.coord_offset.push_back(coord);
    out.gen_offset.push_back(orders.size());
    out.gen_count.push_back(cg.lifts.size());
    for (std::size_t i = 0; i < cg.lifts.size(); ++i) {
      local.emplace_back(coord, cg.lifts[i]);
      orders.push_back(cg.orders[i]);
    }
    out.lattice = direct_sum(out.lattice, g);
    coord += g.rank();
  }
  out.lattice = direct_sum(out.lattice, GramLattice(IntMat{{Int(2)}}));
  std::size_t n = out.lattice.rank();
  for (auto& [off, w] : local) {
    RatVec v(n, Rat(0));
    for (std::size_t i = 0; i < w.size(); ++i) v[off + i] = w[i];
    out.lifts.push_back(v);
  }
  RatVec h(n, Rat(0));
  h[n - 1] = Rat(1, 2);
  out.lifts.push_back(h);
  orders.push_back(2);
  out.gamma = orders.size() - 1;
  std::size_t k = orders.size();
  std::vector<std::vector<Rat>> qm(k, std::vector<Rat>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rat v = out.lattice.dot(out.lifts[i], out.lifts[j]);
      Int m = i == j ? Int(2) : Int(1);
      v -= Rat(floor_rat(v / Rat(m)) * m);
      qm[i][j] = v;
    }
  out.form = FiniteQuadraticForm::from_matrix(orders, qm);
  if (out.form.rank() != k) throw InternalError("build_S: a generator of order 1 slipped in");
  return out;
}

AdmissibleGroup admissible_automorphisms(const SData& s, const Limits& limits) {
  AdmissibleGroup out;
  const FiniteQuadraticForm& f = s.form;
  std::size_t nc = s.sigma.components.size();
  for (std::size_t c = 0; c < nc; ++c) {
    const RootComponent& comp = s.sigma.components[c];
    std::size_t off = s.gen_offset[c], cnt = s.gen_count[c];
    if (cnt == 0) continue;
    // Local form of the component.
    std::vector<Element> basis;
    std::vector<i64> orders;
    for (std::size_t i = 0; i < cnt; ++i) {
      basis.push_back(f.unit(off + i));
      orders.push_back(f.orders()[off + i]);
    }
    FiniteQuadraticForm local = induced_form(f, basis, orders);
    auto extend = [&](const std::vector<Element>& imgs) {
      FormAutomorphism a = FormAutomorphism::identity(f);
      for (std::size_t i = 0; i < cnt; ++i) a.images[off + i] = s.component_element(c, imgs[i]);
      return a;
    };
    std::vector<std::vector<Element>> local_gens;
    int n = comp.rank;
    bool full = false;
    if (comp.type == 'A' || (comp.type == 'E' && n == 6)) {
      local_gens.push_back({local.scale(local.unit(0), -1)});
    } else if (comp.type == 'D') {
      if (n % 8 == 4 && n >= 12) {
        local_gens.push_back({local.unit(1), local.unit(0)});  // swap the spinor classes
      } else {
        full = true;
      }
    }
    if (full) {
      AutomorphismGroup ag = automorphisms(local, limits);
      for (const FormAutomorphism& g : ag.generators) local_gens.push_back(g.images);
    }
    for (const auto& imgs : local_gens) {
      FormAutomorphism a = extend(imgs);
      if (a.key(f) == FormAutomorphism::identity(f).key(f)) continue;
      out.generators.push_back(a);
      out.kinds.push_back("symmetry " + comp.str());
    }
  }
  // Transpositions of adjacent identical components.
  for (std::size_t c = 0; c + 1 < nc; ++c) {
    if (s.sigma.components[c] != s.sigma.components[c + 1] || s.gen_count[c] == 0) continue;
    FormAutomorphism a = FormAutomorphism::identity(f);
    for (std::size_t i = 0; i < s.gen_count[c]; ++i) {
      std::swap(a.images[s.gen_offset[c] + i], a.images[s.gen_offset[c + 1] + i]);
    }
    out.generators.push_back(a);
    out.kinds.push_back("swap " + s.sigma.components[c].str());
  }
  return out;
}

}  // namespace sextic
