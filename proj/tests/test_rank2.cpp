#include <doctest.h>

#include <algorithm>
#include <random>

#include "sextic/rank2.hpp"
#include "sextic/rootdata.hpp"
#include "support.hpp"

using namespace sextic;

namespace {

IntMat G(i64 a, i64 b, i64 c) {
  return IntMat{{Int(static_cast<long>(a)), Int(static_cast<long>(b))},
                {Int(static_cast<long>(b)), Int(static_cast<long>(c))}};
}

std::string red(const IntMat& g) { return reduce(g).form.str(); }

std::vector<std::string> strs(const std::vector<ReducedForm>& v) {
  std::vector<std::string> out;
  for (const auto& m : v) out.push_back(m.str());
  return out;
}

}  // namespace

TEST_CASE("reduction") {
  CHECK(red(G(4, 3, 4)) == "M(1,1,2)");
  CHECK(red(G(2, 0, 4)) == "M(1,0,2)");
  CHECK(red(G(38, 0, 2)) == "M(1,0,19)");
  CHECK(red(G(2, -1, 2)) == "M(1,1,1)");
  Reduction r = reduce(G(10, 7, 6));
  CHECK(mul(mul(transpose(r.basis), G(10, 7, 6)), r.basis) == r.form.gram());
  CHECK(abs(determinant(r.basis)) == 1);
  CHECK_THROWS_AS(reduce(G(2, 1, -2)), DomainError);
  CHECK_THROWS_AS(reduce(G(3, 0, 2)), DomainError);
  CHECK_THROWS_AS(reduce(G(2, 4, 2)), DomainError);
}

TEST_CASE("reduction is invariant under change of basis") {
  std::mt19937_64 rng(sextic::testing::kSeed);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (const ReducedForm& m : reduced_forms_of_det(60)) {
    for (int trial = 0; trial < 20; ++trial) {
      IntMat t;
      do t = G(coef(rng), coef(rng), coef(rng)), t[1][0] = coef(rng);
      while (abs(determinant(t)) != 1);
      IntMat g = mul(mul(transpose(t), m.gram()), t);
      CHECK(reduce(g).form == m);
    }
  }
}

TEST_CASE("orthogonal group case table") {
  auto check = [](ReducedForm m, OrthCaseTag tag, int order) {
    OrthCase c = orthogonal_group(m);
    CAPTURE(m.str());
    CHECK(c.tag == tag);
    CHECK(c.order == order);
    std::vector<IntMat> all = orthogonal_group_elements(m);
    CHECK(all.size() == static_cast<std::size_t>(order));
    CHECK(all.size() == definite_isometries(m.lattice()).size());
    for (const IntMat& t : all) CHECK(mul(mul(transpose(t), m.gram()), t) == m.gram());
  };
  check({4, 2, 5}, OrthCaseTag::Generic, 2);
  check({3, 1, 3}, OrthCaseTag::AEqualsC, 4);
  check({1, 0, 19}, OrthCaseTag::BZero, 4);
  check({5, 0, 5}, OrthCaseTag::Square, 8);
  check({2, 2, 5}, OrthCaseTag::BEqualsA, 4);
  check({6, 6, 6}, OrthCaseTag::Hexagonal, 12);
}

TEST_CASE("reduced forms of a determinant") {
  std::vector<std::string> d76 = strs(reduced_forms_of_det(76));
  CHECK(std::count(d76.begin(), d76.end(), "M(1,0,19)") == 1);
  CHECK(std::count(d76.begin(), d76.end(), "M(4,2,5)") == 1);
  CHECK(std::count(d76.begin(), d76.end(), "M(2,2,10)") == 1);
  CHECK(strs(reduced_forms_of_det(3)) == std::vector<std::string>{"M(1,1,1)"});
  CHECK(reduced_forms_of_det(1).empty());
  for (i64 d = 3; d <= 120; ++d)
    for (const ReducedForm& m : reduced_forms_of_det(d)) {
      CHECK(m.det() == d);
      CHECK((0 <= m.b && m.b <= m.a && m.a <= m.c));
    }
  // brute force over the reduced box: a <= sqrt(d/3)
  for (i64 d = 3; d <= 200; ++d) {
    std::vector<ReducedForm> brute;
    for (i64 a = 1; 3 * a * a <= d; ++a)
      for (i64 b = 0; b <= a; ++b)
        if ((d + b * b) % (4 * a) == 0 && (d + b * b) / (4 * a) >= a) brute.push_back({a, b, (d + b * b) / (4 * a)});
    std::vector<ReducedForm> got = reduced_forms_of_det(d);
    std::sort(brute.begin(), brute.end());
    std::sort(got.begin(), got.end());
    CAPTURE(d);
    CHECK(got == brute);
  }
}

TEST_CASE("genus enumeration") {
  // targets are the negated discriminants of the complements
  FiniteQuadraticForm a18 = discriminant_form(ReducedForm{1, 0, 19}.lattice()).form;
  CHECK(strs(enumerate_genus(a18)) == std::vector<std::string>{"M(1,0,19)", "M(4,2,5)"});
  FiniteQuadraticForm d19 = negate(build_S(parse_singularities("D19")).form);
  CHECK(strs(enumerate_genus(d19)) == std::vector<std::string>{"M(1,0,2)"});
  CHECK(strs(enumerate_genus(parse_form("<1/2>+<1/2>"))) == std::vector<std::string>{"M(1,0,1)"});
  CHECK(enumerate_genus(parse_form("<-1/2>+<-1/2>")).empty());
}

TEST_CASE("disorienting isometries") {
  CHECK_FALSE(has_disorienting_isometry({4, 2, 5}));
  CHECK(has_disorienting_isometry({1, 0, 19}));
  CHECK(has_disorienting_isometry({6, 0, 12}));
  CHECK(has_disorienting_isometry({1, 1, 1}));
}
