#pragma once

#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(std::size_t n);
IntMat zero_matrix(std::size_t rows, std::size_t cols);
IntMat transpose(const IntMat& a);
IntMat mul(const IntMat& a, const IntMat& b);
IntVec mul(const IntMat& a, const IntVec& v);
RatVec mul(const IntMat& a, const RatVec& v);
RatMat to_rat(const IntMat& a);
Rat dot(const RatVec& x, const IntMat& g, const RatVec& y);
Int dot(const IntVec& x, const IntMat& g, const IntVec& y);

Int determinant(const IntMat& a);
// Exact inverse over Q; throws DomainError when singular.
RatMat inverse(const RatMat& a);
// Inverse of a unimodular integer matrix.
IntMat unimodular_inverse(const IntMat& a);

// Basis (as rows) of the Z-span of the rows of a, in Hermite normal form.
IntMat hnf_rows(const IntMat& a);

struct SmithForm {
  IntVec diagonal;  // nonnegative, each dividing the next; length min(rows, cols)
  IntMat U;         // rows x rows, unimodular
  IntMat V;         // cols x cols, unimodular
};
// U * a * V = diag(diagonal).
SmithForm smith_normal_form(const IntMat& a);

}  // namespace sextic
