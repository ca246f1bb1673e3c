#pragma once

#include <string>
#include <vector>

#include "sextic/fqf.hpp"
#include "sextic/lattice.hpp"

namespace sextic {

// Positive definite even binary lattice M(a,b,c) with Gram matrix [[2a, b], [b, 2c]],
// normalized by 0 <= b <= a <= c.
struct ReducedForm {
  i64 a = 0, b = 0, c = 0;

  i64 det() const { return 4 * a * c - b * b; }
  IntMat gram() const { return IntMat{{Int(2 * a), Int(b)}, {Int(b), Int(2 * c)}}; }
  GramLattice lattice() const { return GramLattice(gram()); }
  std::string str() const;
  auto operator<=>(const ReducedForm&) const = default;
};

struct Reduction {
  ReducedForm form;
  IntMat basis;  // columns: the reduced basis in the input coordinates (T^t G T = gram)
};

Reduction reduce(const IntMat& gram);

enum class OrthCaseTag { Generic, AEqualsC, BZero, Square, BEqualsA, Hexagonal };

struct OrthCase {
  OrthCaseTag tag = OrthCaseTag::Generic;
  std::vector<IntMat> generators;  // acting on coordinate columns in the reduced basis
  int order = 2;
  std::string name() const;
};

OrthCase orthogonal_group(const ReducedForm& m);
// All elements of the group generated by the case generators.
std::vector<IntMat> orthogonal_group_elements(const ReducedForm& m);

std::vector<ReducedForm> reduced_forms_of_det(i64 det);
std::vector<ReducedForm> enumerate_genus(const FiniteQuadraticForm& target, const Limits& limits = {});
bool has_disorienting_isometry(const ReducedForm& m);

}  // namespace sextic
