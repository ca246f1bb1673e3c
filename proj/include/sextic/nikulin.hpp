#pragma once

#include <string>
#include <vector>

#include "sextic/fqf.hpp"

namespace sextic {

struct GenusSymbol {
  int sigma_plus = 0;
  int sigma_minus = 0;
  FiniteQuadraticForm form;

  int rank() const { return sigma_plus + sigma_minus; }
  bool indefinite() const { return sigma_plus > 0 && sigma_minus > 0; }
  std::string str() const;
};

struct ConditionReport {
  std::string id;      // e.g. "existence(3) p=5"
  bool holds = false;
  std::string detail;  // witness or reason
};

struct ExistenceVerdict {
  bool exists = false;
  std::vector<ConditionReport> conditions;
  std::string failed;           // id of the first failing condition, empty if none
  bool det_condition_decisive = false;  // a determinant condition was actually evaluated
};

ExistenceVerdict exists_even_lattice(const GenusSymbol& g, const Limits& limits = {});

enum class Uniqueness { Unique, Unknown };
struct UniquenessVerdict {
  Uniqueness verdict = Uniqueness::Unknown;
  std::vector<ConditionReport> conditions;
};

enum class Onto { UniqueAndOnto, Unknown };
struct OntoVerdict {
  Onto verdict = Onto::Unknown;
  std::vector<ConditionReport> conditions;
};

// Sufficient conditions only; both throw DomainError unless the genus is indefinite of rank >= 3.
UniquenessVerdict unique_in_genus(const GenusSymbol& g, const Limits& limits = {});
OntoVerdict aut_onto(const GenusSymbol& g, const Limits& limits = {});

// True when every lattice of the genus is forced to contain a vector of square 2
// (indefinite and rk >= l + 2).  False means "not guaranteed".
bool guaranteed_square_two(const GenusSymbol& g);

// Orthogonal summand detectors used by the sufficient conditions.
bool has_equal_scale_pair(const FiniteQuadraticForm& f, i64 p, const Limits& limits = {});  // <a/p^k>+<b/p^k>, p odd
bool has_hyperbolic_summand(const FiniteQuadraticForm& f, int k, const Limits& limits = {});  // U or V at scale 2^k, k = 0: any
bool has_adjacent_cyclic_pair(const FiniteQuadraticForm& f, const Limits& limits = {});       // <a/2^k>+<b/2^(k+1)>

std::string to_string(Uniqueness u);
std::string to_string(Onto o);

}  // namespace sextic
