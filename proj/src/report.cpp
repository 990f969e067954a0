#include "canonx/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace canonx {

void PropertyReport::finalize() {
  max_residual = 0.0;
  for (double r : residuals) max_residual = std::max(max_residual, r);
  pass = max_residual <= tolerance;
}

namespace {

nlohmann::ordered_json to_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["inputs"] = r.inputs;
  j["abs_mode"] = r.abs_mode;
  j["quadrature"] = {{"trunc", r.grid_cfg.trunc},
                     {"points", r.grid_cfg.points},
                     {"tol", r.grid_cfg.tol}};
  j["grid_label"] = r.grid_label;
  j["grid"] = r.grid;
  j["residuals"] = r.residuals;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (r.adjudication) {
    nlohmann::ordered_json a;
    a["chosen"] = r.adjudication->chosen;
    for (const auto& [form, resid] : r.adjudication->residuals) a["residuals"][form] = resid;
    j["adjudication"] = std::move(a);
  }
  if (!r.extra.empty()) {
    nlohmann::ordered_json e;
    for (const auto& [k, v] : r.extra) e[k] = v;
    j["extra"] = std::move(e);
  }
  return j;
}

}  // namespace

std::string report_to_json(const PropertyReport& r, int indent) {
  return to_json(r).dump(indent);
}

std::string reports_to_json(const std::vector<PropertyReport>& reports, int indent) {
  nlohmann::ordered_json j;
  bool all = true;
  for (const PropertyReport& r : reports) all = all && r.pass;
  j["pass"] = all;
  j["checks"] = nlohmann::ordered_json::array();
  for (const PropertyReport& r : reports) j["checks"].push_back(to_json(r));
  return j.dump(indent);
}

}  // namespace canonx
