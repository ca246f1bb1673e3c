#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

// Coordinates of a group element with respect to the generators of a form.
using Element = std::vector<i64>;

struct FormBlock {
  enum class Kind { Cyclic, U, V };
  Kind kind = Kind::Cyclic;
  i64 num = 0;  // numerator m of <m/n>
  i64 den = 1;  // n for <m/n>, 2^k for U(2^k) and V(2^k)

  static FormBlock cyclic(i64 m, i64 n);
  static FormBlock u(int k);
  static FormBlock v(int k);

  i64 prime() const;
  int scale() const;  // exponent k with den = p^k
  i64 order() const;
  std::string str() const;

  bool operator==(const FormBlock& o) const { return kind == o.kind && num == o.num && den == o.den; }
  bool operator!=(const FormBlock& o) const { return !(*this == o); }
  bool operator<(const FormBlock& o) const;
};

// Nonsingular Q/2Z-valued quadratic form on (+) Z/d_i.  Values are stored scaled by the
// exponent N = lcm(d_i): the diagonal holds N q(g_i) mod 2N, off-diagonal N b(g_i,g_j) mod N.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(std::vector<i64> orders, std::vector<std::vector<i64>> scaled, i64 exponent);
  // q_matrix: diagonal q(g_i) mod 2, off-diagonal b(g_i,g_j) mod 1.
  static FiniteQuadraticForm from_matrix(const std::vector<i64>& orders, const std::vector<std::vector<Rat>>& q_matrix);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<i64>& orders() const { return orders_; }
  i64 exponent() const { return N_; }
  i64 size() const;
  bool trivial() const { return orders_.empty(); }
  i64 scaled(std::size_t i, std::size_t j) const { return raw_[i][j]; }
  std::vector<std::vector<Rat>> q_matrix() const;

  i64 q_scaled(const Element& x) const;  // N q(x) mod 2N
  i64 b_scaled(const Element& x, const Element& y) const;  // N b(x,y) mod N
  Rat q(const Element& x) const;  // in [0, 2)
  Rat b(const Element& x, const Element& y) const;  // in [0, 1)

  Element zero() const { return Element(orders_.size(), 0); }
  Element unit(std::size_t i) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, i64 k) const;
  Element reduce(Element x) const;
  i64 order_of(const Element& x) const;
  i64 index_of(const Element& x) const;
  Element element_at(i64 index) const;
  std::vector<Element> elements(i64 bound) const;

  bool nondegenerate() const;
  std::string str() const;  // block notation of the normal form

  bool operator==(const FiniteQuadraticForm& o) const {
    return orders_ == o.orders_ && N_ == o.N_ && raw_ == o.raw_;
  }

 private:
  std::vector<i64> orders_;
  i64 N_ = 1;
  std::vector<std::vector<i64>> raw_;
};

struct Subgroup {
  std::vector<Element> generators;
  std::vector<i64> elements;  // sorted element indices
  i64 order() const { return static_cast<i64>(elements.size()); }
  bool contains(i64 index) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

// An automorphism given by the images of the generators.
struct FormAutomorphism {
  std::vector<Element> images;
  Element apply(const FiniteQuadraticForm& f, const Element& x) const;
  FormAutomorphism compose(const FiniteQuadraticForm& f, const FormAutomorphism& inner) const;  // this o inner
  std::vector<i64> key(const FiniteQuadraticForm& f) const;
  static FormAutomorphism identity(const FiniteQuadraticForm& f);
};

struct AutomorphismGroup {
  std::vector<FormAutomorphism> generators;
  Int order;
  std::vector<FormAutomorphism> elements;  // every element; empty if not materialized
};

struct SubformBasis {
  FiniteQuadraticForm form;
  std::vector<Element> basis;  // ambient coordinates of the generators of `form`
};

struct RankInvariants {
  int ell = 0;
  std::map<i64, int> ell_p;
  bool even = true;
  int ell_at(i64 p) const {
    auto it = ell_p.find(p);
    return it == ell_p.end() ? 0 : it->second;
  }
};

struct QuotientForm {
  FiniteQuadraticForm form;
  std::vector<Element> lifts;          // representatives in the ambient form of the generators
  std::vector<i64> projection;         // ambient index -> quotient index, -1 outside the perp
  Element project(const FiniteQuadraticForm& ambient, const Element& x) const;
};

struct DetClass {
  bool defined = true;
  i64 unit = 1;  // odd p: +1 / -1 (Legendre class); p = 2: residue in {1,3,5,7}
};

FiniteQuadraticForm from_blocks(const std::vector<FormBlock>& blocks);
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g);
FiniteQuadraticForm negate(const FiniteQuadraticForm& f);
SubformBasis primary_part(const FiniteQuadraticForm& f, i64 p);
// Form induced on the subgroup spanned by an independent basis of the given orders.
FiniteQuadraticForm induced_form(const FiniteQuadraticForm& f, const std::vector<Element>& basis,
                                 const std::vector<i64>& orders);
std::vector<i64> primes_of(const FiniteQuadraticForm& f);

int brown_gauss(const FiniteQuadraticForm& f, const Limits& limits = {});
int brown_blocks(const FiniteQuadraticForm& f, const Limits& limits = {});
int brown_of_blocks(const std::vector<FormBlock>& blocks);

RankInvariants rank_invariants(const FiniteQuadraticForm& f);
// Orthogonal splitting into blocks (not canonical).
std::vector<FormBlock> orthogonal_blocks(const FiniteQuadraticForm& f, const Limits& limits = {});
std::vector<FormBlock> normal_form(const FiniteQuadraticForm& f, const Limits& limits = {});
bool is_isomorphic(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g, const Limits& limits = {});
// Images in g of the generators of f under some isometry f -> g.
std::optional<std::vector<Element>> find_isomorphism(const FiniteQuadraticForm& f, const FiniteQuadraticForm& g,
                                                     const Limits& limits = {});
AutomorphismGroup automorphisms(const FiniteQuadraticForm& f, const Limits& limits = {});

Subgroup subgroup_generated(const FiniteQuadraticForm& f, const std::vector<Element>& gens);
bool is_isotropic(const FiniteQuadraticForm& f, const Subgroup& k);
std::vector<Subgroup> isotropic_subgroups(const FiniteQuadraticForm& f, const Limits& limits = {});
Subgroup subgroup_perp(const FiniteQuadraticForm& f, const Subgroup& k);
// Invariant factors and representatives of A/B for subgroups B of A given by generators.
SubformBasis subquotient_basis(const FiniteQuadraticForm& f, const std::vector<Element>& a_gens,
                               const std::vector<Element>& b_gens);
QuotientForm quotient_form(const FiniteQuadraticForm& f, const Subgroup& k);
DetClass det_p_class(const FiniteQuadraticForm& f, i64 p, const Limits& limits = {});
std::vector<i64> invariant_factors(const FiniteQuadraticForm& f);

std::string to_string(const std::vector<FormBlock>& blocks);
std::vector<FormBlock> parse_blocks(const std::string& text);
FiniteQuadraticForm parse_form(const std::string& text);

}  // namespace sextic
