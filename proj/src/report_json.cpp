#include "sextic/report_json.hpp"

namespace sextic {

namespace {

nlohmann::json bounds(i64 lo, i64 hi) {
  if (lo == hi) return lo;
  nlohmann::json j = nlohmann::json::array();
  j.push_back(lo);
  if (hi < 0)
    j.push_back(nullptr);
  else
    j.push_back(hi);
  return j;
}

nlohmann::json conditions(const std::vector<ConditionReport>& cs) {
  nlohmann::json j = nlohmann::json::array();
  for (const ConditionReport& c : cs) j.push_back(to_json(c));
  return j;
}

}  // namespace

nlohmann::json to_json(const ConditionReport& c) {
  return {{"condition", c.id}, {"holds", c.holds}, {"detail", c.detail}};
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json out;
  out["sigma"] = r.sigma.str();
  out["mu"] = r.sigma.mu();
  out["configurations"] = nlohmann::json::array();
  out["genus_checks"] = nlohmann::json::array();
  for (const ConfigurationReport& c : r.configurations) {
    nlohmann::json jc;
    jc["kernel_order"] = c.config.kernel.order();
    jc["kernel_invariants"] = c.config.kernel_invariants;
    jc["index"] = c.config.index;
    jc["s_tilde_discr"] = c.config.s_tilde.form.str();
    nlohmann::json comp;
    comp["genus"] = c.complement.genus.str();
    if (c.complement.definite) {
      nlohmann::json reps = nlohmann::json::array();
      for (const ReducedForm& m : c.complement.representatives) reps.push_back(m.str());
      comp["representatives"] = reps;
    } else {
      nlohmann::json cert;
      cert["exists"] = c.complement.existence.exists;
      cert["uniqueness"] = to_string(c.complement.uniqueness->verdict);
      cert["surjectivity"] = to_string(c.complement.onto->verdict);
      cert["fast_path"] = c.complement.fast_path;
      comp["certificate"] = cert;
    }
    jc["complement"] = comp;
    nlohmann::json types = nlohmann::json::array();
    for (const HomologicalType& t : c.types) {
      nlohmann::json jt;
      jt["N"] = t.complement;
      jt["coset_id"] = t.coset_id >= 0 ? nlohmann::json(t.coset_id) : nlohmann::json(nullptr);
      jt["symmetry"] = to_string(t.symmetry);
      types.push_back(jt);
    }
    jc["types"] = types;
    jc["type_count"] = bounds(c.types_low, c.types_high);
    jc["class_count"] = bounds(c.classes_low, c.classes_high);
    jc["reducible"] = c.config.reducible;
    jc["abundant"] = c.config.abundant ? nlohmann::json(*c.config.abundant) : nlohmann::json(nullptr);
    out["configurations"].push_back(jc);

    nlohmann::json checks;
    checks["genus"] = c.complement.genus.str();
    checks["existence"] = conditions(c.complement.existence.conditions);
    if (c.complement.uniqueness) checks["uniqueness"] = conditions(c.complement.uniqueness->conditions);
    if (c.complement.onto) checks["surjectivity"] = conditions(c.complement.onto->conditions);
    out["genus_checks"].push_back(checks);
  }
  out["unrealizable_kernels"] = r.unrealizable;
  if (r.zariski) {
    nlohmann::json z;
    z["e"] = r.zariski->e;
    z["a"] = std::vector<int>(r.zariski->a.begin() + 1, r.zariski->a.end());
    z["n"] = r.zariski->n;
    z["virtual_genus"] = r.zariski->virtual_genus;
    z["virtual_genus_convention"] = "floor";
    out["zariski"] = z;
  } else {
    out["zariski"] = nullptr;
  }
  out["class_count"] = bounds(r.class_low, r.class_high);
  return out;
}

}  // namespace sextic
