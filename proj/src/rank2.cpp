#include "sextic/rank2.hpp"

#include <algorithm>
#include <set>

namespace sextic {

std::string ReducedForm::str() const {
  return "M(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Reduction reduce(const IntMat& gram) {
  if (gram.size() != 2 || gram[0].size() != 2 || gram[1].size() != 2 || gram[0][1] != gram[1][0])
    throw DomainError("reduce: expected a symmetric 2x2 Gram matrix");
  Int A = gram[0][0], B = gram[0][1], C = gram[1][1];
  if (A % 2 != 0 || C % 2 != 0) throw DomainError("reduce: the lattice is not even");
  if (A <= 0 || A * C - B * B <= 0) throw DomainError("reduce: the lattice is not positive definite");
  IntMat T = identity_matrix(2);
  auto swap_uv = [&] {
    std::swap(A, C);
    for (auto& row : T) std::swap(row[0], row[1]);
  };
  for (;;) {
    if (A > C) swap_uv();
    // v -> v - k u with k the nearest integer to B / A
    Int k = floor_div(2 * B + A, 2 * A);
    if (k != 0) {
      C = C - 2 * k * B + k * k * A;
      B = B - k * A;
      for (auto& row : T) row[1] -= k * row[0];
    }
    if (A <= C && 2 * abs(B) <= A) break;
  }
  if (B < 0) {
    B = -B;
    for (auto& row : T) row[1] = -row[1];
  }
  Reduction r;
  r.form = ReducedForm{to_i64(A / 2), to_i64(B), to_i64(C / 2)};
  r.basis = T;
  return r;
}

std::string OrthCase::name() const {
  switch (tag) {
    case OrthCaseTag::Generic: return "generic";
    case OrthCaseTag::AEqualsC: return "a=c";
    case OrthCaseTag::BZero: return "b=0";
    case OrthCaseTag::Square: return "square";
    case OrthCaseTag::BEqualsA: return "b=a";
    case OrthCaseTag::Hexagonal: return "hexagonal";
  }
  return "?";
}

OrthCase orthogonal_group(const ReducedForm& m) {
  IntMat minus{{Int(-1), Int(0)}, {Int(0), Int(-1)}};
  IntMat swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
  // t_u, t_v: reflections against the lines spanned by u and v
  IntMat tu{{Int(1), Int(0)}, {Int(0), Int(-1)}};
  IntMat tv{{Int(-1), Int(0)}, {Int(0), Int(1)}};
  // t_u when b = a: u -> u, v -> u - v
  IntMat tu_skew{{Int(1), Int(1)}, {Int(0), Int(-1)}};
  OrthCase out;
  if (m.b == 0 && m.a == m.c) {
    out = {OrthCaseTag::Square, {tu, swap}, 8};
  } else if (m.b == 0) {
    out = {OrthCaseTag::BZero, {tu, tv}, 4};
  } else if (m.b == m.a && m.a == m.c) {
    out = {OrthCaseTag::Hexagonal, {tu_skew, swap}, 12};
  } else if (m.b == m.a) {
    out = {OrthCaseTag::BEqualsA, {minus, tu_skew}, 4};
  } else if (m.a == m.c) {
    out = {OrthCaseTag::AEqualsC, {minus, swap}, 4};
  } else {
    out = {OrthCaseTag::Generic, {minus}, 2};
  }
  return out;
}

std::vector<IntMat> orthogonal_group_elements(const ReducedForm& m) {
  OrthCase oc = orthogonal_group(m);
  std::vector<IntMat> out{identity_matrix(2)};
  std::set<IntMat> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const IntMat& g : oc.generators) {
      IntMat h = mul(g, out[i]);
      if (seen.insert(h).second) out.push_back(h);
    }
  if (static_cast<int>(out.size()) != oc.order)
    throw InternalError("orthogonal_group: generators of " + m.str() + " do not give the tabulated order");
  return out;
}

std::vector<ReducedForm> reduced_forms_of_det(i64 det) {
  if (det <= 0) throw DomainError("reduced_forms_of_det: determinant must be positive");
  std::vector<ReducedForm> out;
  for (i64 ac = (det + 3) / 4; ac * 3 <= det; ++ac) {
    i64 b2 = 4 * ac - det;
    i64 b = to_i64(isqrt(Int(b2)));
    if (b * b != b2) continue;
    for (i64 a = 1; a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      i64 c = ac / a;
      if (b <= a) out.push_back(ReducedForm{a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedForm> enumerate_genus(const FiniteQuadraticForm& target, const Limits& limits) {
  i64 det = target.size();
  RankInvariants want = rank_invariants(target);
  if (want.ell > 2) return {};
  int brown = brown_gauss(target, limits);
  std::vector<ReducedForm> out;
  for (const ReducedForm& m : reduced_forms_of_det(det)) {
    FiniteQuadraticForm d = discriminant_form(m.lattice()).form;
    RankInvariants ri = rank_invariants(d);
    if (ri.ell_p != want.ell_p || ri.even != want.even) continue;
    if (brown_gauss(d, limits) != brown) continue;
    if (is_isomorphic(d, target, limits)) out.push_back(m);
  }
  return out;
}

bool has_disorienting_isometry(const ReducedForm& m) {
  return orthogonal_group(m).tag != OrthCaseTag::Generic;
}

}  // namespace sextic
