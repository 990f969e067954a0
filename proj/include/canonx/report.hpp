#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonx/funcspec.hpp"

namespace canonx {

// Residuals of one adjudicated identity under each candidate sign convention;
// `chosen` is the convention with the smallest max residual.
struct Adjudication {
  std::string chosen;
  std::vector<std::pair<std::string, double>> residuals;
};

// Self-describing outcome of one named theorem check: re-running the same
// check from these fields reproduces the residual array bit for bit.
struct PropertyReport {
  std::string name;
  std::array<double, 4> params{1.0, 0.0, 0.0, 1.0};
  std::vector<std::string> inputs;
  std::string abs_mode = "signed";
  QuadratureConfig grid_cfg;
  std::string grid_label = "s";
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<Adjudication> adjudication;
  std::vector<std::pair<std::string, double>> extra;

  void finalize();  // fills max_residual and pass
};

std::string report_to_json(const PropertyReport& r, int indent = 2);
std::string reports_to_json(const std::vector<PropertyReport>& reports, int indent = 2);

}  // namespace canonx
