#include "septower/workbench.hpp"

namespace septower {

namespace {

Json verdict(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

Json witness_json(const SeparabilityReport& r) {
  Json w;
  if (r.pair) {
    const auto& a = *r.witness_element;
    w["kind"] = "pair";
    w["element"] = a.to_string();
    w["over"] = subfield_name(r.pair->over);
    w["phi"] = r.pair->phi.to_string();
    w["psi"] = r.pair->psi.to_string();
    w["phi_image"] = apply(r.pair->phi, a).to_string();
    w["psi_image"] = apply(r.pair->psi, a).to_string();
  } else if (r.canonical) {
    w["kind"] = "canonical_subfield";
    w["element"] = r.witness_element ? Json(r.witness_element->to_string()) : Json(nullptr);
    w["exponent"] = r.exponent;
    w["subfield"] = subfield_name(*r.canonical);
    Json gens = Json::array();
    if (r.canonical->dimension() > 1) {
      for (const auto& g : r.canonical->generators()) gens.push_back(g.to_string());
    }
    w["generators"] = std::move(gens);
  } else {
    w["kind"] = nullptr;
  }
  return w;
}

}  // namespace

Json report_json(const SeparabilityReport& r, std::optional<std::size_t> closure_degree,
                 std::optional<std::string> primitive) {
  Json j;
  j["schema"] = 1;
  j["degree"] = r.degree;
  j["hom_count"] = r.hom_count;
  j["separable"] = r.separable();
  j["criteria"] = {{"derivative", verdict(r.by_derivative)},
                   {"hom_count", verdict(r.by_hom_count)},
                   {"witness", verdict(r.by_witness)}};
  j["witness"] = witness_json(r);
  j["closure_degree"] = closure_degree ? Json(*closure_degree) : Json(nullptr);
  j["primitive"] = primitive ? Json(*primitive) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json verification_json(const std::vector<CriterionResult>& results) {
  Json j;
  j["schema"] = 1;
  Json list = Json::array();
  bool all = true;
  for (const auto& c : results) {
    list.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"details", c.details}});
    all = all && c.pass;
  }
  j["criteria"] = std::move(list);
  j["all_pass"] = all;
  return j;
}

}  // namespace septower
