#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

struct AcceptanceOptions {
  std::uint64_t seed = 20061015;
  Limits limits;
};

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Runs every acceptance criterion, printing one PASS/FAIL line per criterion to `out`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);

}  // namespace sextic
