#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sextic/arith.hpp"
#include "sextic/fqf.hpp"
#include "sextic/matrix.hpp"

namespace sextic {

// Integral lattice given by a symmetric Gram matrix in some basis.
class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(IntMat gram);

  std::size_t rank() const { return gram_.size(); }
  const IntMat& gram() const { return gram_; }
  const Int& at(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  Int dot(const IntVec& x, const IntVec& y) const { return sextic::dot(x, gram_, y); }
  Rat dot(const RatVec& x, const RatVec& y) const { return sextic::dot(x, gram_, y); }
  bool even() const;

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

 private:
  IntMat gram_;
};

struct LatticeInvariants {
  Int det;
  int sigma_plus = 0;
  int sigma_minus = 0;
  int radical = 0;  // dimension of the kernel of the Gram matrix
  bool even = true;
};

LatticeInvariants invariants(const GramLattice& l);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& l, const Int& n);  // L(n)
GramLattice copies(const GramLattice& l, int n);          // nL
GramLattice negate(const GramLattice& l);                 // L(-1)

// Discriminant form L*/L together with lifts of its generators to L* (coordinates in the
// basis of L, so a lift x satisfies G x integral).
struct DiscriminantData {
  FiniteQuadraticForm form;
  std::vector<RatVec> lifts;
  // Coordinates of the class of x in L* with respect to the generators of `form`.
  Element coordinates(const RatVec& x) const;

  IntMat coord_rows;           // rows of diag(d) V^{-1} for the kept invariant factors
  std::vector<i64> coord_mod;  // the kept invariant factors
};

DiscriminantData discriminant_form(const GramLattice& l);

// Every v in L with v.v == norm; L must be definite.
std::vector<IntVec> short_vectors(const GramLattice& l, const Int& norm, const Limits& limits = {});

// Every v in shift + L with |v.v| <= bound, paired with v.v; L must be definite.
std::vector<std::pair<RatVec, Rat>> coset_vectors(const GramLattice& l, const RatVec& shift, const Rat& bound,
                                                  const Limits& limits = {});

struct RootComponent {
  char type = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  std::string str() const { return std::string(1, type) + std::to_string(rank); }
  auto operator<=>(const RootComponent&) const = default;
};

// Formats a multiset of components, largest first ("E6+2A2+A1").
std::string components_label(std::vector<RootComponent> comps);

struct RootSublattice {
  GramLattice lattice;  // Gram matrix of the root sublattice in `basis`
  IntMat basis;         // rows: basis vectors in the coordinates of L
  std::vector<RootComponent> components;  // sorted ascending
  std::size_t root_count = 0;
  std::string label() const { return components_label(components); }
};

// Sublattice spanned by the vectors of square -2 (or +2 when L is positive definite).
RootSublattice root_sublattice(const GramLattice& l, const Limits& limits = {});
RootComponent identify_root_component(int rank, std::size_t roots);

// Matrix (acting on coordinate columns) of x -> x - 2 (a.x / a.a) a.
IntMat reflection(const GramLattice& l, const IntVec& a);

struct Extension {
  GramLattice lattice;
  RatMat basis;  // rows: basis of the extension in the coordinates of L
  Int index;
};

Extension finite_index_extension(const GramLattice& l, const std::vector<RatVec>& kernel_lifts);

// All isometries (as matrices acting on coordinate columns) of a definite lattice.
std::vector<IntMat> definite_isometries(const GramLattice& l, const Limits& limits = {});
bool is_isometry(const GramLattice& l, const IntMat& t);
FormAutomorphism discriminant_action(const DiscriminantData& d, const IntMat& t);
int orientation_character(const GramLattice& l, const IntMat& t);

// Text format: a line "rank n" followed by n rows of integers.
GramLattice parse_gram(const std::string& text);
std::string format_gram(const GramLattice& l);
GramLattice load_fixture(const std::string& name);

}  // namespace sextic
