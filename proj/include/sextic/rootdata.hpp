#pragma once

#include <string>
#include <vector>

#include "sextic/fqf.hpp"
#include "sextic/lattice.hpp"

namespace sextic {

// Multiset of ADE components, kept sorted ascending by (type, rank).
struct SingularitySet {
  std::vector<RootComponent> components;

  int mu() const;
  std::string str() const { return components.empty() ? "0" : components_label(components); }
  bool operator==(const SingularitySet& o) const { return components == o.components; }
};

SingularitySet parse_singularities(const std::string& text);
SingularitySet make_singularity_set(std::vector<RootComponent> comps);
RootComponent parse_component(const std::string& text);

// Negative definite Gram matrix in the simple-root basis (Bourbaki numbering for A, D, E7, E8;
// for E6 the chain e1..e5 with e6 attached to e3).
GramLattice make_root_lattice(const RootComponent& c);
GramLattice make_root_lattice(const SingularitySet& s);

// Closed-form discriminant of the negative definite root lattice.
std::vector<FormBlock> discriminant_table(const RootComponent& c);

// Fundamental weights generating discr of a component: A_p: w1; D_q odd: w_q; D_q even: the
// two spinor weights w_{q-1}, w_q; E6, E7: the first weight of full order; E8: none.
struct ComponentGenerators {
  std::vector<RatVec> lifts;  // in simple-root coordinates of the component
  std::vector<i64> orders;
};
ComponentGenerators component_generators(const RootComponent& c);

// S = Sigma + <h>, h^2 = 2, with its discriminant form generated component by component and
// gamma = h/2 as the last generator.
struct SData {
  SingularitySet sigma;
  GramLattice lattice;
  FiniteQuadraticForm form;
  std::vector<RatVec> lifts;           // generator lifts in coordinates of S
  std::vector<std::size_t> coord_offset;  // first coordinate of each component in S
  std::vector<std::size_t> gen_offset;    // first generator index of each component in the form
  std::vector<std::size_t> gen_count;
  std::size_t gamma = 0;               // generator index of h/2

  // The discriminant generators of component c, as elements of `form`.
  Element component_element(std::size_t c, const Element& local) const;
};

SData build_S(const SingularitySet& s);

struct AdmissibleGroup {
  std::vector<FormAutomorphism> generators;
  std::vector<std::string> kinds;  // "symmetry <component>" or "swap <component>"
};

AdmissibleGroup admissible_automorphisms(const SData& s, const Limits& limits = {});

}  // namespace sextic
