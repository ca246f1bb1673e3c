#include <doctest.h>

#include "sextic/fqf.hpp"
#include "sextic/rootdata.hpp"
#include "support.hpp"

using namespace sextic;
using sextic::testing::gauss_sum_oracle;

namespace {

FiniteQuadraticForm F(const std::string& s) { return parse_form(s); }

int nonzero_isotropic(const FiniteQuadraticForm& f) {
  int n = 0;
  for (i64 i = 1; i < f.size(); ++i)
    if (f.q(f.element_at(i)) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("from_blocks builds the listed generators") {
  FiniteQuadraticForm a2 = from_blocks({FormBlock::cyclic(-2, 3)});
  CHECK(a2.size() == 3);
  CHECK(a2.q(a2.unit(0)) == Rat(4, 3));  // -2/3 mod 2

  FiniteQuadraticForm t = from_blocks({});
  CHECK(t.size() == 1);
  CHECK(t.trivial());

  FiniteQuadraticForm v2 = from_blocks({FormBlock::v(1)});
  CHECK(v2.orders() == std::vector<i64>{2, 2});
  auto m = v2.q_matrix();
  CHECK(m[0][0] == 1);
  CHECK(m[1][1] == 1);
  CHECK(m[0][1] == Rat(1, 2));
}

TEST_CASE("direct sums and negation") {
  FiniteQuadraticForm s = F("<-19/20>+<1/2>");
  CHECK(s.size() == 40);
  FiniteQuadraticForm f = F("<2/3>");
  CHECK(is_isomorphic(direct_sum(f, from_blocks({})), f));
  // direct count: x = (a,b) with 2a^2 - 2b^2 = 0 mod 6 <=> a = +-b, a != 0
  int by_hand = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if ((a || b) && ((2 * a * a - 2 * b * b) % 6 + 6) % 6 == 0) ++by_hand;
  CHECK(nonzero_isotropic(F("<2/3>+<-2/3>")) == by_hand);
  CHECK(by_hand == 4);

  CHECK(is_isomorphic(negate(F("<1/2>")), F("<3/2>")));
  CHECK(negate(from_blocks({})).trivial());
  FiniteQuadraticForm a2 = discriminant_form(make_root_lattice(parse_component("A2"))).form;
  CHECK(brown_gauss(negate(a2)) == (8 - brown_gauss(a2)) % 8);
  CHECK(gauss_sum_oracle(negate(a2)) == (8 - gauss_sum_oracle(a2)) % 8);
}

TEST_CASE("primary parts") {
  FiniteQuadraticForm f = F("<-19/20>");
  CHECK(is_isomorphic(primary_part(f, 5).form, F("<4/5>")));
  CHECK(is_isomorphic(primary_part(f, 2).form, F("<1/4>")));
  CHECK(primary_part(f, 7).form.trivial());
  CHECK(primes_of(F("<-19/20>+<2/3>")) == std::vector<i64>{2, 3, 5});
}

TEST_CASE("Brown invariant by Gauss sum") {
  CHECK(brown_gauss(F("<1/2>")) == 1);
  CHECK(gauss_sum_oracle(F("<1/2>")) == 1);
  CHECK(brown_gauss(from_blocks({})) == 0);
  CHECK(brown_gauss(F("V(2)")) == 4);
  CHECK(brown_gauss(F("V(4)")) == 0);  // 4k mod 8 at k = 2
  CHECK(gauss_sum_oracle(F("V(2)")) == 4);
}

TEST_CASE("Brown invariant by blocks") {
  CHECK(brown_blocks(F("<-2/3>")) == 6);
  CHECK(gauss_sum_oracle(F("<-2/3>")) == 6);
  for (int k = 1; k <= 3; ++k) CHECK(brown_of_blocks({FormBlock::u(k)}) == 0);
  CHECK(brown_blocks(F("<1/2>+<-1/2>")) == 0);
}

TEST_CASE("rank invariants and parity") {
  FiniteQuadraticForm s = build_S(parse_singularities("2A9+A1")).form;
  CHECK(rank_invariants(s).ell_at(2) == 4);
  CHECK_FALSE(rank_invariants(F("<1/2>")).even);
  RankInvariants u = rank_invariants(F("U(2)"));
  CHECK(u.even);
  CHECK(u.ell_at(2) == 2);
  CHECK(u.ell == 2);
}

TEST_CASE("orthogonal blocks and normal form") {
  FiniteQuadraticForm s = build_S(parse_singularities("A19")).form;
  CHECK(to_string(normal_form(s)) == to_string(normal_form(F("<4/5>+<1/4>+<1/2>"))));
  CHECK(is_isomorphic(from_blocks(orthogonal_blocks(s)), F("<4/5>+<1/4>+<1/2>")));
  CHECK(orthogonal_blocks(from_blocks({})).empty());
  CHECK(to_string(normal_form(from_blocks({}))) == "0");
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(F("<-19/20>+<1/2>"), F("<4/5>+<1/4>+<1/2>")));
  CHECK(is_isomorphic(F("<2/3>+U(2)"), F("<2/3>+U(2)")));
  CHECK_FALSE(is_isomorphic(F("<1/2>+<1/2>"), F("U(2)")));
  CHECK_FALSE(is_isomorphic(F("<1/2>"), F("<3/2>")));
  // Relations between blocks that the normal form must absorb.
  // e1+e2, e2+e3 span V(2), orthogonal to e1+e2+e3 of square 3/2
  CHECK(is_isomorphic(F("<1/2>+<1/2>+<1/2>"), F("<3/2>+V(2)")));
  CHECK(is_isomorphic(F("U(2)+U(2)"), F("V(2)+V(2)")));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(F("<-19/20>")).order == 4);
  CHECK(automorphisms(from_blocks({})).order == 1);
  CHECK(automorphisms(F("<-2/3>+<-2/3>+<-2/3>")).order == 48);
  CHECK(automorphisms(F("V(2)")).order == 6);
  CHECK(automorphisms(F("U(2)")).order == 2);
}

TEST_CASE("isotropic subgroups") {
  std::vector<Subgroup> d19 = isotropic_subgroups(build_S(parse_singularities("D19")).form);
  REQUIRE(d19.size() == 1);
  CHECK(d19[0].order() == 1);

  std::vector<Subgroup> nine = isotropic_subgroups(F("<2/3>+<-2/3>"));
  CHECK(nine.size() == 3);
  for (const Subgroup& k : nine) CHECK(is_isotropic(F("<2/3>+<-2/3>"), k));

  SData s = build_S(parse_singularities("2A9+A1"));
  const FiniteQuadraticForm& f = s.form;
  std::set<i64> found;
  for (i64 i = 1; i < f.size(); ++i) {
    Element x = f.element_at(i);
    if (f.order_of(x) == 2 && f.q(x) == 0) found.insert(i);
  }
  // components are sorted: A1, A9, A9
  Element gamma = f.unit(s.gamma);
  Element beta = s.component_element(0, {1});
  std::set<i64> expected{f.index_of(f.add(beta, gamma)),
                         f.index_of(f.add(s.component_element(1, {5}), gamma)),
                         f.index_of(f.add(s.component_element(2, {5}), gamma))};
  CHECK(found == expected);
}

TEST_CASE("orthogonal complements") {
  FiniteQuadraticForm f = F("<2/3>+<-2/3>");
  Subgroup all = subgroup_perp(f, subgroup_generated(f, {}));
  CHECK(all.order() == 9);
  Subgroup diag = subgroup_generated(f, {Element{1, 1}});
  CHECK(subgroup_perp(f, diag) == diag);
}

TEST_CASE("quotient forms") {
  SData s = build_S(parse_singularities("2A9+A1"));
  int tens = 0;
  for (const Subgroup& k : isotropic_subgroups(s.form)) {
    if (k.order() != 10) continue;
    ++tens;
    CHECK(is_isomorphic(quotient_form(s.form, k).form, F("<-1/2>+<-1/2>")));
  }
  CHECK(tens > 0);
  FiniteQuadraticForm f = F("<2/3>");
  CHECK(is_isomorphic(quotient_form(f, subgroup_generated(f, {})).form, f));
  FiniteQuadraticForm g = F("<2/3>+<-2/3>");
  CHECK(quotient_form(g, subgroup_generated(g, {Element{1, 1}})).form.trivial());
}

TEST_CASE("determinant classes") {
  DetClass d3 = det_p_class(F("<-2/3>"), 3);
  CHECK(d3.defined);
  CHECK(d3.unit == 1);
  DetClass d2 = det_p_class(F("U(2)"), 2);
  CHECK(d2.defined);
  CHECK(d2.unit == 7);
  CHECK(det_p_class(from_blocks({}), 5).unit == 1);
  CHECK_FALSE(det_p_class(F("<1/2>"), 2).defined);
}

TEST_CASE("parsing rejects malformed blocks") {
  CHECK_THROWS_AS(F("<1/3>"), DomainError);
  CHECK_THROWS_AS(F("<2/4>"), DomainError);
  CHECK_THROWS_AS(F("W(2)"), DomainError);
  CHECK(F("0").trivial());
}
