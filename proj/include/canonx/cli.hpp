#pragma once

#include <string>
#include <vector>

#include "canonx/boehmian.hpp"
#include "canonx/convolution.hpp"
#include "canonx/funcspec.hpp"
#include "canonx/params.hpp"
#include "canonx/verify.hpp"

namespace canonx::cli {

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
  std::vector<double> materialize() const;
};

GridSpec parse_grid(const std::string& text);  // "lo:hi:n"

enum class Command { transform, convolve, delta, boehmian, verify };

struct RunConfig {
  Command command = Command::verify;
  CanonicalParams params = fourier_params();
  QuadratureConfig quadrature = default_quadrature();
  bool quadrature_overridden = false;

  // transform / convolve
  TransformKind kind = TransformKind::lct;
  ConvKind op = ConvKind::classic;
  AbsMode abs_mode = AbsMode::signed_arg;
  std::string input_path, g_path, out_path;
  GridSpec grid;

  // delta
  double delta_x = 0.0;
  int nmax = 64;
  std::string report_path;

  // boehmian
  std::string check;
  std::string spec_path, spec2_path;
  int depth = 16;
  int kmax = 8;

  // verify
  std::string suite = "all";
};

// Parses and fully validates argv (without the program name); throws
// UsageError with the offending flag named.
RunConfig parse_args(const std::vector<std::string>& argv);

// Executes a validated config. Returns 0 on success, 1 when a verify-style
// check fails, 2 on runtime errors. Output files are written atomically.
int run(const RunConfig& cfg);

// Top-level entry: parse + run + structured JSON errors on stderr.
int main_entry(const std::vector<std::string>& argv);

FunctionSpec parse_function_json(const std::string& text);
FunctionSpec load_function(const std::string& path);

void write_field_csv(const std::string& path, const SampledField& field,
                     const std::string& label);
SampledField read_field_csv(const std::string& path);
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace canonx::cli
