#include <doctest.h>

#include <filesystem>
#include <random>

#include "sextic/lattice.hpp"
#include "sextic/nikulin.hpp"
#include "support.hpp"

using namespace sextic;

namespace {

GenusSymbol genus_of(const GramLattice& l) {
  LatticeInvariants inv = invariants(l);
  return {inv.sigma_plus, inv.sigma_minus, discriminant_form(l).form};
}

GenusSymbol G(int sp, int sm, const std::string& form) { return {sp, sm, parse_form(form)}; }

}  // namespace

TEST_CASE("existence") {
  ExistenceVerdict v = exists_even_lattice(G(2, 0, "0"));
  CHECK_FALSE(v.exists);
  CHECK(v.failed == "existence(2)");
  CHECK(exists_even_lattice(G(0, 1, "<-1/2>")).exists);
  CHECK(exists_even_lattice(G(8, 0, "0")).exists);
  CHECK(exists_even_lattice(G(1, 1, "0")).exists);
  CHECK_FALSE(exists_even_lattice(G(1, 0, "<1/2>+<1/2>")).exists);  // rank below l
  for (const auto& entry : std::filesystem::directory_iterator(std::string(SEXTIC_FIXTURE_DIR) + "/lattices")) {
    CAPTURE(entry.path().stem().string());
    CHECK(exists_even_lattice(genus_of(load_fixture(entry.path().stem().string()))).exists);
  }
}

TEST_CASE("existence agrees with a brute-force search in rank 1") {
  // every even lattice of rank 1 is <2n> or <-2n>
  std::mt19937_64 rng(sextic::testing::kSeed);
  int decided = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<FormBlock> blocks = sextic::testing::random_blocks(rng, 60, 2);
    FiniteQuadraticForm f = from_blocks(blocks);
    if (f.trivial()) continue;
    for (int sign : {1, -1}) {
      GenusSymbol g{sign > 0 ? 1 : 0, sign > 0 ? 0 : 1, f};
      GramLattice witness(IntMat{{Int(static_cast<long>(sign * f.size()))}});
      bool brute = f.size() % 2 == 0 && is_isomorphic(discriminant_form(witness).form, f);
      CAPTURE(to_string(blocks));
      CHECK(exists_even_lattice(g).exists == brute);
      decided += brute;
    }
  }
  CHECK(decided > 0);
}

TEST_CASE("uniqueness") {
  CHECK(unique_in_genus(G(2, 2, "<-1/2>+<-1/2>+<-2/3>+<-2/3>+<-2/3>")).verdict == Uniqueness::Unique);
  GramLattice six_u3(IntMat{{Int(6), Int(0), Int(0)}, {Int(0), Int(0), Int(3)}, {Int(0), Int(3), Int(0)}});
  CHECK(unique_in_genus(genus_of(six_u3)).verdict == Uniqueness::Unique);
  CHECK_THROWS_AS(unique_in_genus(G(2, 0, "<1/2>+<1/2>")), DomainError);
  CHECK_THROWS_AS(unique_in_genus(G(1, 1, "0")), DomainError);
  UniquenessVerdict v = unique_in_genus(G(1, 2, "0"));
  CHECK(v.verdict == Uniqueness::Unique);
  CHECK_FALSE(v.conditions.empty());
}

TEST_CASE("surjectivity onto the discriminant automorphisms") {
  CHECK(aut_onto(G(1, 9, "<2/3>")).verdict == Onto::UniqueAndOnto);
  CHECK(aut_onto(G(2, 7, "<-1/2>+<2/3>")).verdict == Onto::UniqueAndOnto);
  CHECK_THROWS_AS(aut_onto(G(2, 0, "<1/2>+<1/2>")), DomainError);
}

TEST_CASE("square-two guarantee") {
  CHECK(guaranteed_square_two(G(2, 1, "<1/2>")));
  CHECK(guaranteed_square_two(G(2, 1, "0")));
  CHECK_FALSE(guaranteed_square_two(G(2, 0, "0")));
  CHECK(guaranteed_square_two(G(1, 1, "0")));
  CHECK_FALSE(guaranteed_square_two(G(2, 1, "<1/2>+<1/2>")));
}

TEST_CASE("orthogonal summand detectors") {
  CHECK(has_equal_scale_pair(parse_form("<2/3>+<4/3>"), 3));
  CHECK_FALSE(has_equal_scale_pair(parse_form("<2/3>+<2/9>"), 3));
  CHECK_FALSE(has_equal_scale_pair(parse_form("<2/3>+<2/5>"), 5));
  CHECK(has_hyperbolic_summand(parse_form("U(2)+<1/2>"), 1));
  CHECK(has_hyperbolic_summand(parse_form("V(4)"), 2));
  CHECK(has_hyperbolic_summand(parse_form("V(4)"), 0));
  CHECK_FALSE(has_hyperbolic_summand(parse_form("V(4)"), 1));
  // three odd cyclic blocks of equal scale contain V(2)
  CHECK(has_hyperbolic_summand(parse_form("<1/2>+<1/2>+<1/2>"), 1));
  CHECK_FALSE(has_hyperbolic_summand(parse_form("<1/2>+<1/2>"), 0));
  CHECK(has_adjacent_cyclic_pair(parse_form("<1/2>+<1/4>")));
  CHECK(has_adjacent_cyclic_pair(parse_form("<1/4>+<3/8>+<2/3>")));
  CHECK_FALSE(has_adjacent_cyclic_pair(parse_form("<1/2>+<1/8>")));
  CHECK_FALSE(has_adjacent_cyclic_pair(parse_form("U(2)+<1/4>")));
}
