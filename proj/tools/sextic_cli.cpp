#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sextic/acceptance.hpp"
#include "sextic/classify.hpp"
#include "sextic/lattice.hpp"
#include "sextic/rank2.hpp"
#include "sextic/report_json.hpp"
#include "sextic/rootdata.hpp"

using namespace sextic;

namespace {

struct Globals {
  bool json = false;
  i64 max_group_order = 4096;
  i64 max_work = 50000000;
  bool debug_full_root_check = false;
  std::uint64_t seed = AcceptanceOptions{}.seed;

  Limits limits() const {
    if (max_group_order <= 0 || max_work <= 0) throw DomainError("bounds must be positive");
    Limits l;
    l.max_group_order = max_group_order;
    l.max_work = max_work;
    l.debug_full_root_check = debug_full_root_check;
    return l;
  }
};

bool looks_like_form(const std::string& s) {
  return s.find('<') != std::string::npos || s.find("U(") != std::string::npos ||
         s.find("V(") != std::string::npos || s == "0";
}

// "M(a,b,c)" or a Gram file or a singularity set.
GramLattice lattice_argument(const std::string& text, std::string& label) {
  if (text.rfind("M(", 0) == 0) {
    long long a, b, c;
    char close = 0;
    std::istringstream in(text.substr(2));
    char comma1, comma2;
    if (!(in >> a >> comma1 >> b >> comma2 >> c >> close) || comma1 != ',' || comma2 != ',' || close != ')')
      throw DomainError("expected M(a,b,c), got '" + text + "'");
    label = text;
    return GramLattice(IntMat{{Int(static_cast<long>(2 * a)), Int(static_cast<long>(b))}, {Int(static_cast<long>(b)), Int(static_cast<long>(2 * c))}});
  }
  if (std::filesystem::exists(text)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    label = text;
    return parse_gram(ss.str());
  }
  SingularitySet s = parse_singularities(text);
  label = s.str();
  return make_root_lattice(s);
}

int cmd_classify(const Globals& g, const std::string& text) {
  SingularitySet s = parse_singularities(text);
  if (s.mu() > 19) throw DomainError("total Milnor number " + std::to_string(s.mu()) + " > 19");
  ClassificationReport r = rigid_isotopy_classes(s, g.limits());
  if (g.json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << format_report(r);
  return 0;
}

int cmd_discr(const Globals& g, const std::string& text) {
  FiniteQuadraticForm f;
  std::string label;
  if (looks_like_form(text)) {
    f = parse_form(text);
    label = text;
  } else {
    f = discriminant_form(lattice_argument(text, label)).form;
  }
  std::string nf = to_string(normal_form(f, g.limits()));
  if (g.json) {
    nlohmann::json j{{"input", label}, {"discr", nf}, {"order", f.size()}, {"brown", brown_gauss(f, g.limits())}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << nf << "\n";
  }
  return 0;
}

int cmd_genus2(const Globals& g, i64 det, const std::string& discr) {
  if (det <= 0) throw DomainError("--det must be positive");
  std::vector<std::pair<std::string, std::vector<ReducedForm>>> genera;
  if (!discr.empty()) {
    FiniteQuadraticForm f = parse_form(discr);
    if (f.size() != det)
      throw DomainError("|discr| = " + std::to_string(f.size()) + " differs from --det " + std::to_string(det));
    genera.push_back({to_string(normal_form(f, g.limits())), enumerate_genus(f, g.limits())});
  } else {
    // Partition all reduced forms of this determinant by discriminant form.
    for (const ReducedForm& m : reduced_forms_of_det(det)) {
      FiniteQuadraticForm f = discriminant_form(m.lattice()).form;
      std::string key = to_string(normal_form(f, g.limits()));
      auto it = std::find_if(genera.begin(), genera.end(), [&](const auto& e) { return e.first == key; });
      if (it == genera.end())
        genera.push_back({key, {m}});
      else
        it->second.push_back(m);
    }
  }
  if (g.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, forms] : genera) {
      nlohmann::json reps = nlohmann::json::array();
      for (const ReducedForm& m : forms) reps.push_back(m.str());
      out.push_back({{"det", det}, {"discr", key}, {"representatives", reps}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [key, forms] : genera) {
      std::cout << "det " << det << ", discr " << key << ":";
      if (forms.empty()) std::cout << " (empty genus)";
      for (const ReducedForm& m : forms) std::cout << " " << m.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_brown(const Globals& g, const std::string& text) {
  FiniteQuadraticForm f = parse_form(text);
  int gauss = brown_gauss(f, g.limits());
  int blocks = brown_blocks(f, g.limits());
  if (g.json)
    std::cout << nlohmann::json{{"form", text}, {"gauss", gauss}, {"blocks", blocks}}.dump(2) << "\n";
  else
    std::cout << "gauss: " << gauss << ", blocks: " << blocks << "\n";
  return gauss == blocks ? 0 : 3;
}

int cmd_selftest(const Globals& g) {
  AcceptanceOptions opt;
  opt.seed = g.seed;
  opt.limits = g.limits();
  std::cout << "seed " << opt.seed << "\n";
  bool ok = true;
  for (const CriterionResult& r : run_acceptance(opt, std::cout)) ok = ok && r.pass;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigid isotopy classification of simple plane sextics via lattice arithmetic"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON")->envname("SEXTIC_JSON");
  app.add_option("--max-group-order", g.max_group_order, "Largest finite group that is enumerated")
      ->envname("SEXTIC_MAX_GROUP_ORDER");
  app.add_option("--max-work", g.max_work, "Step budget for each enumeration")->envname("SEXTIC_MAX_WORK");
  app.add_flag("--debug-full-root-check", g.debug_full_root_check,
               "Check the half-sum condition against every root, not only A1 summands")
      ->envname("SEXTIC_DEBUG_FULL_ROOT_CHECK");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->envname("SEXTIC_SEED");

  std::string sigma, form_text, discr_text;
  i64 det = 0;
  auto* classify = app.add_subcommand("classify", "Classify sextics with a given set of singularities");
  classify->add_option("sigma", sigma, "Singularity set, e.g. 2A9+A1")->required();
  auto* discr = app.add_subcommand("discr", "Discriminant form of a lattice or normal form of a form");
  discr->add_option("input", form_text, "Singularity set, M(a,b,c), Gram file or block expression")->required();
  auto* genus2 = app.add_subcommand("genus2", "Positive definite binary lattices in a genus");
  genus2->add_option("--det", det, "Determinant")->required();
  genus2->add_option("--discr", discr_text, "Discriminant form; all genera of the determinant if omitted");
  auto* brown = app.add_subcommand("brown", "Brown invariant by Gauss sum and by orthogonal blocks");
  brown->add_option("form", form_text, "Block expression, e.g. \"<1/2>+U(2)\"")->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  for (CLI::App* sub : {classify, discr, genus2, brown, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (*classify) return cmd_classify(g, sigma);
    if (*discr) return cmd_discr(g, form_text);
    if (*genus2) return cmd_genus2(g, det, discr_text);
    if (*brown) return cmd_brown(g, form_text);
    if (*selftest) return cmd_selftest(g);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
