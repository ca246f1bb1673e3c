#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sextic/fqf.hpp"
#include "sextic/nikulin.hpp"
#include "sextic/rank2.hpp"
#include "sextic/rootdata.hpp"

namespace sextic {

// Automorphisms of a small form as permutations of its element indices.
using Perm = std::vector<i64>;

struct Configuration {
  Subgroup kernel;                  // isotropic subgroup of discr S
  std::vector<i64> kernel_invariants;
  i64 index = 1;                    // [S~ : S] = |K|
  QuotientForm s_tilde;             // discr S~ = K-perp / K
  std::size_t orbit_size = 1;       // number of kernels in the Aut_h-orbit
  std::vector<Perm> stabilizer;     // generators of Stab(K) in Aut_h, acting on discr S
  std::size_t sigma_tilde_roots = 0;
  bool reducible = false;
  std::optional<bool> abundant;
};

enum class Symmetry { Symmetric, Asymmetric, Undetermined };
std::string to_string(Symmetry s);

struct HomologicalType {
  std::string complement;  // "M(a,b,c)" or "genus" when the complement is only known up to genus
  int coset_id = -1;       // index of the double coset, -1 when not enumerated
  Symmetry symmetry = Symmetry::Undetermined;
  std::string reason;
};

struct ComplementInfo {
  GenusSymbol genus;
  bool definite = false;
  std::vector<ReducedForm> representatives;  // definite case
  ExistenceVerdict existence;
  std::optional<UniquenessVerdict> uniqueness;
  std::optional<OntoVerdict> onto;
  bool fast_path = false;  // l(S~) + mu <= 19
};

struct ConfigurationReport {
  Configuration config;
  ComplementInfo complement;
  std::vector<HomologicalType> types;
  i64 types_low = 0, types_high = 0;      // types_high = -1: unbounded
  i64 classes_low = 0, classes_high = 0;  // classes_high = -1: unbounded
};

// e E6 + sum a_i A_{3i-1} + n A1 with 2e + sum i a_i = 6.
struct ZariskiShape {
  int e = 0;
  std::array<int, 7> a{};  // a[1..6]
  int n = 0;
  int virtual_genus = 0;   // floor convention for the bracket
  std::string str() const;
};

struct ClassificationReport {
  SingularitySet sigma;
  std::vector<ConfigurationReport> configurations;  // only those whose complement genus is nonempty
  std::size_t unrealizable = 0;                      // kernels dropped because the complement genus is empty
  i64 class_low = 0, class_high = 0;  // class_high = -1: unbounded
  std::optional<ZariskiShape> zariski;
  bool exact() const { return class_low == class_high; }
};

std::vector<Configuration> configurations(const SingularitySet& sigma, const Limits& limits = {});
GenusSymbol complement_genus(const SingularitySet& sigma, const Configuration& c);
ConfigurationReport analyze_configuration(const SingularitySet& sigma, const Configuration& c,
                                          const Limits& limits = {});
ClassificationReport rigid_isotopy_classes(const SingularitySet& sigma, const Limits& limits = {});

bool is_reducible(const Configuration& c);
std::optional<ZariskiShape> zariski_info(const SingularitySet& sigma);

std::string format_report(const ClassificationReport& r);

}  // namespace sextic
