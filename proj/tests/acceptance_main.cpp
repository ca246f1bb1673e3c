#include <cstdlib>
#include <iostream>
#include <string>

#include "sextic/acceptance.hpp"

int main(int argc, char** argv) {
  sextic::AcceptanceOptions opt;
  if (const char* s = std::getenv("SEXTIC_SEED")) opt.seed = std::stoull(s);
  if (argc > 1) opt.seed = std::stoull(argv[1]);
  std::cout << "seed " << opt.seed << std::endl;
  int failed = 0;
  for (const auto& r : sextic::run_acceptance(opt, std::cout)) failed += !r.pass;
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " criteria" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
