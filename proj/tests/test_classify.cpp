#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "sextic/classify.hpp"
#include "sextic/report_json.hpp"
#include "support.hpp"

using namespace sextic;

namespace {

SingularitySet S(const std::string& s) { return parse_singularities(s); }

std::vector<std::string> reps(const ConfigurationReport& r) {
  std::vector<std::string> out;
  for (const auto& m : r.complement.representatives) out.push_back(m.str());
  return out;
}

const ConfigurationReport& by_index(const ClassificationReport& r, i64 index) {
  for (const auto& c : r.configurations)
    if (c.config.index == index) return c;
  FAIL("no configuration of the requested index");
  return r.configurations.front();
}

RatVec lift_of(const SData& s, const Element& x) {
  RatVec v(s.lattice.rank(), Rat(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += Rat(x[i]) * s.lifts[i][j];
  return v;
}

bool integral(const RatVec& v) {
  for (Rat q : v) {
    q.canonicalize();
    if (q.get_den() != 1) return false;
  }
  return true;
}

// Definition of a configuration checked directly on lattice vectors:
// the hull of Sigma gains no roots and no (r+h)/2 lies in the extension.
bool is_configuration_oracle(const SData& s, const Subgroup& k, const Limits& lim) {
  const FiniteQuadraticForm& f = s.form;
  std::size_t mu = s.lattice.rank() - 1;
  GramLattice sigma = make_root_lattice(s.sigma);
  std::vector<RatVec> sigma_lifts;
  std::vector<RatVec> all_lifts;
  for (i64 idx : k.elements) {
    Element x = f.element_at(idx);
    RatVec v = lift_of(s, x);
    all_lifts.push_back(v);
    if (x[s.gamma] == 0) sigma_lifts.push_back(RatVec(v.begin(), v.begin() + static_cast<long>(mu)));
  }
  std::vector<IntVec> roots = short_vectors(sigma, Int(-2), lim);
  if (!sigma_lifts.empty()) {
    Extension hull = finite_index_extension(sigma, sigma_lifts);
    if (short_vectors(hull.lattice, Int(-2), lim).size() != roots.size()) return false;
  }
  for (const IntVec& r : roots)
    for (const RatVec& w : all_lifts) {
      RatVec v(mu + 1);
      for (std::size_t j = 0; j < mu; ++j) v[j] = Rat(r[j], 2) - w[j];
      v[mu] = Rat(1, 2) - w[mu];
      if (integral(v)) return false;
    }
  return true;
}

std::vector<i64> image(const std::vector<i64>& perm, const std::vector<i64>& elems) {
  std::vector<i64> out;
  for (i64 e : elems) out.push_back(perm[e]);
  std::sort(out.begin(), out.end());
  return out;
}

void check_orbit_soundness(const std::string& text, const Limits& lim) {
  CAPTURE(text);
  SingularitySet sigma = S(text);
  SData s = build_S(sigma);
  REQUIRE(s.form.size() <= 512);
  auto group = sextic::testing::perm_closure(s.form, admissible_automorphisms(s, lim).generators);
  std::vector<Configuration> cs = configurations(sigma, lim);
  std::vector<std::set<std::vector<i64>>> orbits;
  for (const Configuration& c : cs) {
    std::set<std::vector<i64>> orbit;
    for (const auto& p : group) orbit.insert(image(p, c.kernel.elements));
    CHECK(orbit.size() == c.orbit_size);
    orbits.push_back(orbit);
  }
  for (const Subgroup& k : isotropic_subgroups(s.form, lim)) {
    int hits = 0;
    for (const auto& o : orbits) hits += o.count(k.elements) ? 1 : 0;
    CHECK(hits == (is_configuration_oracle(s, k, lim) ? 1 : 0));
  }
}

// Root systems whose imprimitive extensions always gain roots; D_q with q = 6 mod 8, q >= 14 is
// left out (D14 + A1 glued along a spinor class gains none, see the dedicated test).
bool always_gains_roots(const std::string& label) {
  static const std::set<std::string> fixed = {"3A2", "A5+A2", "A8", "E6+A2", "2A4", "A5+A1",
                                              "A7", "D8", "E7+A1", "4A1", "A3+2A1"};
  if (fixed.count(label)) return true;
  for (int q = 4; q <= 17; ++q)
    if ((q < 12 || q % 4 != 0) && !(q >= 14 && q % 8 == 6) && label == "D" + std::to_string(q) + "+2A1")
      return true;
  return false;
}

// Kernel elements with trivial h-part supported on the components in `mask`.
bool supported_on(const SData& s, const Element& x, unsigned mask) {
  if (x[s.gamma] != 0) return false;
  bool nonzero = false;
  for (std::size_t c = 0; c < s.sigma.components.size(); ++c)
    for (std::size_t i = s.gen_offset[c]; i < s.gen_offset[c] + s.gen_count[c]; ++i) {
      if (x[i] == 0) continue;
      if (!(mask >> c & 1u)) return false;
      nonzero = true;
    }
  return nonzero;
}

std::vector<std::string> random_sets(std::uint64_t seed, int count) {
  static const std::vector<std::pair<std::string, i64>> pool = {
      {"A1", 2}, {"A2", 3}, {"A3", 4}, {"A4", 5}, {"A5", 6}, {"A6", 7}, {"A7", 8}, {"A8", 9},
      {"D4", 4}, {"D5", 4}, {"D6", 4}, {"D8", 4}, {"E6", 3}, {"E7", 2}, {"E8", 1}};
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<RootComponent> comps;
    i64 order = 2;
    int mu = 0;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      const auto& [name, d] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      RootComponent c = parse_component(name);
      if (order * d > 512 || mu + c.rank > 19) continue;
      order *= d;
      mu += c.rank;
      comps.push_back(c);
    }
    out.push_back(make_singularity_set(comps).str());
  }
  return out;
}

}  // namespace

TEST_CASE("configurations of the worked examples") {
  CHECK(configurations(S("A19")).size() == 1);
  CHECK(configurations(S("A19"))[0].kernel.order() == 1);
  // two further kernel orbits pass the definition but have an empty complement genus
  CHECK(configurations(S("2A9+A1")).size() == 4);
  ClassificationReport two = rigid_isotopy_classes(S("2A9+A1"));
  std::set<i64> idx;
  for (const auto& c : two.configurations) idx.insert(c.config.index);
  CHECK(idx == std::set<i64>{2, 10});
  CHECK(two.unrealizable == 2);
  std::vector<Configuration> cusps = configurations(S("6A2"));
  REQUIRE(cusps.size() == 2);
  CHECK(cusps[0].index == 1);
  CHECK(cusps[1].index == 3);
}

TEST_CASE("complement genus") {
  Configuration d19 = configurations(S("D19"))[0];
  GenusSymbol g = complement_genus(S("D19"), d19);
  CHECK(g.sigma_plus == 2);
  CHECK(g.sigma_minus == 0);
  CHECK(g.form.size() == 8);
  CHECK(is_isomorphic(g.form, negate(parse_form("<-3/4>+<1/2>"))));
  CHECK(complement_genus(S("A19"), configurations(S("A19"))[0]).form.size() == 40);
  GenusSymbol e = complement_genus(S("0"), configurations(S("0"))[0]);
  CHECK(e.sigma_plus == 2);
  CHECK(e.sigma_minus == 19);
  CHECK(is_isomorphic(e.form, parse_form("<-1/2>")));
}

TEST_CASE("complement representatives") {
  ClassificationReport a18 = rigid_isotopy_classes(S("A18+A1"));
  REQUIRE(a18.configurations.size() == 1);
  CHECK(reps(a18.configurations[0]) == std::vector<std::string>{"M(1,0,19)", "M(4,2,5)"});
  ClassificationReport p = rigid_isotopy_classes(S("E6+A7+A3+A2+A1"));
  REQUIRE(p.configurations.size() == 1);
  CHECK(reps(p.configurations[0]) == std::vector<std::string>{"M(6,0,12)"});
  ClassificationReport cusps = rigid_isotopy_classes(S("6A2"));
  for (const auto& c : cusps.configurations) {
    CHECK(c.complement.fast_path);
    REQUIRE(c.complement.onto.has_value());
    CHECK(c.complement.onto->verdict == Onto::UniqueAndOnto);
  }
}

TEST_CASE("homological types and symmetry") {
  ClassificationReport a19 = rigid_isotopy_classes(S("A19"));
  CHECK(a19.configurations[0].types.size() == 2);
  ClassificationReport d19 = rigid_isotopy_classes(S("D19"));
  CHECK(d19.configurations[0].types.size() == 1);
  ClassificationReport two = rigid_isotopy_classes(S("2A9+A1"));
  CHECK(by_index(two, 2).types.size() == 2);
  CHECK(reps(by_index(two, 2)) == std::vector<std::string>{"M(5,0,5)"});
  CHECK(by_index(two, 10).types.size() == 1);
  CHECK(reps(by_index(two, 10)) == std::vector<std::string>{"M(1,0,1)"});

  ClassificationReport a18 = rigid_isotopy_classes(S("A18+A1"));
  std::map<std::string, Symmetry> sym;
  for (const auto& t : a18.configurations[0].types) sym[t.complement] = t.symmetry;
  CHECK(sym["M(1,0,19)"] == Symmetry::Symmetric);
  CHECK(sym["M(4,2,5)"] == Symmetry::Asymmetric);
  ClassificationReport p = rigid_isotopy_classes(S("E6+A7+A3+A2+A1"));
  CHECK(p.configurations[0].types.size() == 2);
  for (const auto& t : p.configurations[0].types) CHECK(t.symmetry == Symmetry::Symmetric);
}

TEST_CASE("rigid isotopy classes") {
  CHECK(rigid_isotopy_classes(S("D19")).class_low == 1);
  ClassificationReport a18 = rigid_isotopy_classes(S("A18+A1"));
  CHECK(a18.exact());
  CHECK(a18.class_low == 3);
  ClassificationReport two = rigid_isotopy_classes(S("2A9+A1"));
  CHECK(two.exact());
  CHECK(two.class_low == 3);
  CHECK(rigid_isotopy_classes(S("A19")).class_low == 2);
  CHECK(rigid_isotopy_classes(S("E6+A7+A3+A2+A1")).class_low == 2);
  CHECK(rigid_isotopy_classes(S("6A2")).class_low == 2);
  CHECK(rigid_isotopy_classes(S("0")).class_low == 1);
  CHECK_THROWS_AS(rigid_isotopy_classes(S("A20")), DomainError);
  Limits tight;
  tight.max_group_order = 16;
  CHECK_THROWS_AS(rigid_isotopy_classes(S("A19"), tight), BoundExceeded);
}

TEST_CASE("class counts follow the symmetry verdicts") {
  for (const char* text : {"A18+A1", "2A9+A1", "A19", "6A2", "E6+A7+A3+A2+A1", "D14+2A1", "3E6"}) {
    ClassificationReport r = rigid_isotopy_classes(S(text));
    i64 lo = 0, hi = 0;
    for (const auto& c : r.configurations) {
      lo += c.classes_low;
      hi = (hi < 0 || c.classes_high < 0) ? -1 : hi + c.classes_high;
      if (!c.complement.definite) continue;
      i64 l = 0, h = 0;
      for (const auto& t : c.types) {
        l += t.symmetry == Symmetry::Asymmetric ? 2 : 1;
        h += t.symmetry == Symmetry::Symmetric ? 1 : 2;
      }
      CHECK(c.classes_low == l);
      CHECK(c.classes_high == h);
    }
    CHECK(r.class_low == lo);
    CHECK(r.class_high == hi);
  }
}

TEST_CASE("reducibility") {
  ClassificationReport p = rigid_isotopy_classes(S("E6+A7+A3+A2+A1"));
  CHECK(is_reducible(p.configurations[0].config));
  CHECK_FALSE(is_reducible(configurations(S("A19"))[0]));
  for (const char* text : {"4A2+A1", "2A9+A1", "D14+2A1", "A7+A5+A3"})
    for (const Configuration& c : configurations(S(text))) {
      CHECK(is_reducible(c) == (c.index % 2 == 0));
      if (c.index == 1) CHECK_FALSE(is_reducible(c));
    }
}

TEST_CASE("Zariski shape and virtual genus") {
  auto six = zariski_info(S("6A2"));
  REQUIRE(six.has_value());
  CHECK(six->e == 0);
  CHECK(six->a[1] == 6);
  CHECK(six->n == 0);
  CHECK(six->virtual_genus == 4);
  auto e3 = zariski_info(S("3E6"));
  REQUIRE(e3.has_value());
  CHECK(e3->e == 3);
  CHECK(e3->virtual_genus == 1);
  CHECK_FALSE(zariski_info(S("A18+A1")).has_value());
  CHECK_FALSE(zariski_info(S("A19")).has_value());
  CHECK_FALSE(zariski_info(S("E6+A5+A2+2A1")).has_value());  // 2 + 2 + 1 != 6
  auto mixed = zariski_info(S("E6+A5+2A2+2A1"));
  REQUIRE(mixed.has_value());
  CHECK(mixed->e == 1);
  CHECK(mixed->a[2] == 1);
  CHECK(mixed->a[1] == 2);
  CHECK(mixed->n == 2);
  CHECK(mixed->virtual_genus == 10 - 3 - 3 - 2 * 1 - 2);
  auto big = zariski_info(S("A17+A1"));  // i = 6, floor(18/2) = 9
  REQUIRE(big.has_value());
  CHECK(big->virtual_genus == 10 - 9 - 1);
}

TEST_CASE("abundance") {
  std::vector<Configuration> cusps = configurations(S("6A2"));
  REQUIRE(cusps.size() == 2);
  CHECK(cusps[0].abundant == std::optional<bool>(false));
  CHECK(cusps[1].abundant == std::optional<bool>(true));
  CHECK_FALSE(configurations(S("A19"))[0].abundant.has_value());
  for (const char* text : {"E6+A5+2A2+A1", "2A5+2A2", "A8+A5+A2", "3E6"})
    for (const Configuration& c : configurations(S(text))) {
      REQUIRE(c.abundant.has_value());
      CHECK(*c.abundant == (c.index % 3 == 0));
    }
}

TEST_CASE("orbit soundness against a lattice-level oracle") {
  Limits lim;
  for (const char* text : {"4A2+A1", "2A9+A1", "D14+2A1", "A5+A2+A1", "4A1", "3A3", "D4+2A1", "E6+A2", "2A4+A1"})
    check_orbit_soundness(text, lim);
  for (const std::string& text : random_sets(sextic::testing::kSeed, 25)) check_orbit_soundness(text, lim);
}

TEST_CASE("listed summands are primitive in every configuration") {
  std::vector<std::string> sets = {"3A2+A1", "A5+A2+2A1", "A8+A2", "E6+A2+A1", "2A4+A3", "A5+A1+A1",
                                   "A7+A3", "D8+A1", "E7+A1+A2", "4A1+A3", "A3+2A1+A2", "D5+2A1",
                                   "D6+2A1", "D10+2A1", "D9+2A1", "D7+2A1+A2"};
  for (const std::string& text : random_sets(sextic::testing::kSeed + 1, 25)) sets.push_back(text);
  int checked = 0;
  for (const std::string& text : sets) {
    CAPTURE(text);
    SData s = build_S(S(text));
    std::size_t n = s.sigma.components.size();
    for (const Configuration& c : configurations(S(text))) {
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<RootComponent> sub;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1u) sub.push_back(s.sigma.components[i]);
        if (!always_gains_roots(make_singularity_set(sub).str())) continue;
        ++checked;
        for (i64 idx : c.kernel.elements) CHECK_FALSE(supported_on(s, s.form.element_at(idx), mask));
      }
      // A1 + <h> is primitive
      for (std::size_t i = 0; i < n; ++i) {
        if (s.sigma.components[i] != RootComponent{'A', 1}) continue;
        Element x = s.form.add(s.form.unit(s.gen_offset[i]), s.form.unit(s.gamma));
        CHECK_FALSE(c.kernel.contains(s.form.index_of(x)));
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("D14 + A1 glued along a spinor class gains no roots") {
  SData s = build_S(S("D14+2A1"));
  int glued = 0;
  for (const Configuration& c : configurations(S("D14+2A1"))) {
    for (unsigned mask : {0b011u, 0b101u})  // D14 sorts after A1: components are A1, A1, D14
      for (i64 idx : c.kernel.elements)
        if (supported_on(s, s.form.element_at(idx), mask)) ++glued;
    CHECK(c.sigma_tilde_roots == short_vectors(make_root_lattice(S("D14+2A1")), Int(-2)).size());
  }
  CHECK(glued > 0);
}

TEST_CASE("JSON report") {
  nlohmann::json j = to_json(rigid_isotopy_classes(S("A18+A1")));
  CHECK(j["sigma"] == "A18+A1");
  CHECK(j["mu"] == 19);
  CHECK(j["class_count"] == 3);
  REQUIRE(j["configurations"].size() == 1);
  const auto& c = j["configurations"][0];
  CHECK(c["complement"]["representatives"].size() == 2);
  CHECK(c["types"].size() == 2);
  CHECK(c["reducible"] == false);

  nlohmann::json e = to_json(rigid_isotopy_classes(S("3E6")));
  CHECK(e["class_count"].is_array());
  CHECK(e["zariski"]["virtual_genus"] == 1);
  for (const auto& cfg : e["configurations"]) {
    CHECK(cfg["complement"].contains("certificate"));
    CHECK(cfg["complement"]["certificate"]["uniqueness"] == "unique");
  }
  nlohmann::json none = to_json(rigid_isotopy_classes(S("0")));
  CHECK(none["zariski"].is_null());
  CHECK(none["class_count"] == 1);
}

TEST_CASE("text report") {
  std::string t = format_report(rigid_isotopy_classes(S("A18+A1")));
  CHECK(t.find("M(1,0,19)") != std::string::npos);
  CHECK(t.find("asymmetric") != std::string::npos);
  CHECK(t.find("Rigid isotopy classes: 3") != std::string::npos);
}
