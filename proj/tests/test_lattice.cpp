#include <doctest.h>

#include <filesystem>
#include <set>

#include "sextic/lattice.hpp"
#include "sextic/rootdata.hpp"
#include "support.hpp"

using namespace sextic;

namespace {

GramLattice M(i64 a, i64 b, i64 c) {
  return GramLattice(IntMat{{Int(static_cast<long>(2 * a)), Int(static_cast<long>(b))},
                            {Int(static_cast<long>(b)), Int(static_cast<long>(2 * c))}});
}

GramLattice root(const std::string& s) { return make_root_lattice(parse_singularities(s)); }

// Lifts of the elements of a subgroup of discr L, in the coordinates of L.
std::vector<RatVec> lifts_of(const DiscriminantData& dd, const std::vector<Element>& gens) {
  std::vector<RatVec> out;
  for (const Element& g : gens) {
    RatVec v(dd.lifts.empty() ? 0 : dd.lifts[0].size(), Rat(0));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(g[i]) * dd.lifts[i][j];
    out.push_back(v);
  }
  return out;
}

Extension saturate_by_order(const GramLattice& l, i64 order) {
  DiscriminantData dd = discriminant_form(l);
  for (const Subgroup& k : isotropic_subgroups(dd.form))
    if (k.order() == order) return finite_index_extension(l, lifts_of(dd, k.generators));
  FAIL("no isotropic subgroup of the requested order");
  return {};
}

}  // namespace

TEST_CASE("lattice invariants") {
  LatticeInvariants u = invariants(GramLattice(IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}}));
  CHECK(u.det == -1);
  CHECK(u.sigma_plus == 1);
  CHECK(u.sigma_minus == 1);
  CHECK(u.even);
  LatticeInvariants z = invariants(GramLattice());
  CHECK(z.det == 1);
  CHECK(z.sigma_plus + z.sigma_minus == 0);
  LatticeInvariants m = invariants(M(4, 2, 5));
  CHECK(m.det == 76);
  CHECK(m.sigma_plus == 2);
  CHECK(m.sigma_minus == 0);
}

TEST_CASE("sums, rescaling and negation") {
  GramLattice two(IntMat{{Int(2)}});
  CHECK(rescale(negate(root("A1")), Int(1)) == two);
  CHECK(to_string(normal_form(discriminant_form(two).form)) == to_string(normal_form(parse_form("<1/2>"))));
  CHECK(rescale(root("A2"), Int(1)) == root("A2"));
  const char* names[] = {"A1", "A2", "D4", "E6", "A5", "D7"};
  for (const char* a : names)
    for (const char* b : names) {
      Int da = invariants(root(a)).det, db = invariants(root(b)).det;
      CHECK(invariants(direct_sum(root(a), root(b))).det == da * db);
    }
  CHECK(copies(root("A2"), 3) == root("3A2"));
}

TEST_CASE("discriminant forms of root lattices") {
  CHECK(root("A2").gram() == IntMat{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
  CHECK(is_isomorphic(discriminant_form(root("A2")).form, parse_form("<-2/3>")));
  CHECK(discriminant_form(root("E8")).form.trivial());
  CHECK(is_isomorphic(discriminant_form(root("D4")).form, parse_form("V(2)")));
}

TEST_CASE("generated discriminants agree with the table") {
  for (int n = 1; n <= 19; ++n) {
    std::vector<RootComponent> comps{{'A', n}};
    if (n >= 4) comps.push_back({'D', n});
    if (n >= 6 && n <= 8) comps.push_back({'E', n});
    for (const RootComponent& c : comps) {
      CAPTURE(c.str());
      CHECK(is_isomorphic(discriminant_form(make_root_lattice(c)).form, from_blocks(discriminant_table(c))));
    }
  }
}

TEST_CASE("short vectors") {
  CHECK(short_vectors(root("A2"), Int(-2)).size() == 6);
  for (int n = 1; n <= 8; ++n)
    CHECK(short_vectors(root("A" + std::to_string(n)), Int(-2)).size() == static_cast<std::size_t>(n * (n + 1)));
  std::vector<IntVec> two = short_vectors(M(1, 0, 19), Int(2));
  REQUIRE(two.size() == 2);
  std::set<IntVec> got(two.begin(), two.end());
  CHECK(got == std::set<IntVec>{{Int(1), Int(0)}, {Int(-1), Int(0)}});
  CHECK(short_vectors(M(4, 2, 5), Int(2)).empty());
  CHECK(short_vectors(M(4, 2, 5), Int(8)).size() == 2);
}

TEST_CASE("root sublattices and saturation") {
  Extension e8 = saturate_by_order(root("E6+A2"), 3);
  RootSublattice r = root_sublattice(e8.lattice);
  CHECK(r.root_count == 240);
  CHECK(r.label() == "E8");
  CHECK(root_sublattice(root("A2")).label() == "A2");

  Extension e6 = saturate_by_order(root("3A2"), 3);
  CHECK(e6.lattice.rank() == 6);
  CHECK(abs(invariants(e6.lattice).det) == 3);
  RootSublattice r6 = root_sublattice(e6.lattice);
  CHECK(r6.root_count == 72);
  CHECK(r6.label() == "E6");
}

TEST_CASE("finite index extensions") {
  Extension e8 = saturate_by_order(root("E6+A2"), 3);
  LatticeInvariants inv = invariants(e8.lattice);
  CHECK(abs(inv.det) == 1);
  CHECK(inv.even);
  CHECK(inv.sigma_minus == 8);
  CHECK(e8.index == 3);
  GramLattice a3 = root("A3");
  Extension same = finite_index_extension(a3, {});
  CHECK(same.index == 1);
  CHECK(invariants(same.lattice).det == invariants(a3).det);

  // S = 2A9 + A1 + <2> and the kernel of order 10
  SData s = build_S(parse_singularities("2A9+A1"));
  bool seen = false;
  for (const Subgroup& k : isotropic_subgroups(s.form)) {
    if (k.order() != 10) continue;
    std::vector<RatVec> lifts;
    for (const Element& g : k.generators) {
      RatVec v(s.lattice.rank(), Rat(0));
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(g[i]) * s.lifts[i][j];
      lifts.push_back(v);
    }
    Extension ext = finite_index_extension(s.lattice, lifts);
    CHECK(abs(invariants(ext.lattice).det) == 4);
    CHECK(abs(invariants(s.lattice).det) / 100 == 4);
    seen = true;
  }
  CHECK(seen);
}

TEST_CASE("reflections") {
  GramLattice a2 = root("A2");
  IntVec r{Int(1), Int(0)};
  IntMat t = reflection(a2, r);
  CHECK(is_isometry(a2, t));
  CHECK(mul(t, t) == identity_matrix(2));
  CHECK(mul(t, r) == IntVec{Int(-1), Int(0)});
  CHECK(reflection(M(1, 0, 2), IntVec{Int(1), Int(0)}) == IntMat{{Int(-1), Int(0)}, {Int(0), Int(1)}});

  DiscriminantData dd = discriminant_form(a2);
  FormAutomorphism act = discriminant_action(dd, t);
  CHECK(act.key(dd.form) == FormAutomorphism::identity(dd.form).key(dd.form));
  GramLattice d5 = root("D5");
  DiscriminantData d5d = discriminant_form(d5);
  for (std::size_t i = 0; i < 5; ++i) {
    IntVec e(5, Int(0));
    e[i] = 1;
    CHECK(discriminant_action(d5d, reflection(d5, e)).key(d5d.form) ==
          FormAutomorphism::identity(d5d.form).key(d5d.form));
  }
}

TEST_CASE("definite isometries") {
  CHECK(definite_isometries(M(1, 0, 1)).size() == 8);
  CHECK(definite_isometries(M(4, 2, 5)).size() == 2);
  CHECK(definite_isometries(M(1, 1, 1)).size() == 12);
  CHECK(definite_isometries(root("A2")).size() == 12);
  CHECK(definite_isometries(root("D4")).size() == 1152);
  for (const IntMat& t : definite_isometries(M(3, 1, 3))) CHECK(is_isometry(M(3, 1, 3), t));
}

TEST_CASE("discriminant action") {
  GramLattice a3 = root("A3");
  DiscriminantData dd = discriminant_form(a3);
  IntMat minus = identity_matrix(3);
  for (auto& row : minus)
    for (auto& x : row) x = -x;
  FormAutomorphism act = discriminant_action(dd, minus);
  for (i64 i = 0; i < dd.form.size(); ++i) {
    Element x = dd.form.element_at(i);
    CHECK(act.apply(dd.form, x) == dd.form.scale(x, -1));
  }

  GramLattice n = M(1, 0, 10);
  DiscriminantData nd = discriminant_form(n);
  std::set<std::vector<i64>> images;
  for (const IntMat& t : definite_isometries(n)) images.insert(discriminant_action(nd, t).key(nd.form));
  CHECK(images.size() == 2);
}

TEST_CASE("orientation character") {
  GramLattice n = M(1, 0, 19);
  IntMat minus{{Int(-1), Int(0)}, {Int(0), Int(-1)}};
  CHECK(orientation_character(n, minus) == 1);
  IntMat tu = reflection(n, IntVec{Int(1), Int(0)});
  CHECK(orientation_character(n, tu) == -1);
  for (const IntMat& a : definite_isometries(M(6, 0, 12)))
    for (const IntMat& b : definite_isometries(M(6, 0, 12)))
      CHECK(orientation_character(M(6, 0, 12), mul(a, b)) ==
            orientation_character(M(6, 0, 12), a) * orientation_character(M(6, 0, 12), b));
}

TEST_CASE("Gram parsing and fixtures") {
  GramLattice g = parse_gram("# test\nrank 2\n2 1\n1 2\n");
  CHECK(g == M(1, 1, 1));
  CHECK(parse_gram(format_gram(g)) == g);
  CHECK_THROWS_AS(parse_gram("rank 2\n2 1\n0 2\n"), DomainError);

  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(SEXTIC_FIXTURE_DIR) + "/lattices")) {
    std::string name = entry.path().stem().string();
    GramLattice l = load_fixture(name);
    CHECK(l.rank() > 0);
    // root lattice fixtures must match the generated Dynkin lattice
    if (name.find('_') == std::string::npos && name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E') &&
        std::isdigit(static_cast<unsigned char>(name[1]))) {
      CAPTURE(name);
      CHECK(l == make_root_lattice(parse_component(name)));
    }
    ++n;
  }
  CHECK(n >= 50);
}
