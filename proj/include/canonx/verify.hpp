#pragma once

#include <string>
#include <vector>

#include "canonx/boehmian.hpp"
#include "canonx/convolution.hpp"
#include "canonx/delta.hpp"
#include "canonx/report.hpp"
#include "canonx/transforms.hpp"

namespace canonx {

// The fourteen transform identities: seven for the cosine transform, seven
// for the sine transform. Items with ambiguous sign conventions are checked
// under every candidate form and adjudicated by residual.
enum class IdentityWhich {
  cct_linearity,
  cct_convolution,
  cct_scaling,
  cct_translation,
  cct_cexp_split,
  cct_cos_product,
  cct_sin_product,
  cst_linearity,
  cst_convolution,
  cst_scaling,
  cst_shifting,
  cst_cexp_split,
  cst_cos_product,
  cst_sin_product,
};

inline constexpr int kIdentityCount = 14;
IdentityWhich identity_at(int i);
const char* identity_name(IdentityWhich which);

struct IdentityArgs {
  FunctionSpec f;
  FunctionSpec g;  // convolution identities only
  CanonicalParams A;
  Complex lambda{2.0, 0.0};
  double k = 2.0;
  double tau = 0.7;
  double x = 0.5;
  AbsMode mode = AbsMode::signed_arg;
  std::vector<double> s_grid;
};

// Generic instance arguments on a given transform-side representative; the
// degenerate variant collapses every knob (lambda=1, k=1, tau=0, x=0, g=0).
IdentityArgs generic_identity_args(IdentityWhich which, const CanonicalParams& A);
IdentityArgs degenerate_identity_args(IdentityWhich which, const CanonicalParams& A);

PropertyReport check_identity(IdentityWhich which, const IdentityArgs& args,
                              const QuadratureConfig& cfg, double tol);

PropertyReport check_cc_convolution(const FunctionSpec& f, const FunctionSpec& g,
                                    const CanonicalParams& A,
                                    const std::vector<double>& sgrid, AbsMode mode,
                                    const QuadratureConfig& cfg, double tol = 1e-4);
PropertyReport check_cs_convolution(const FunctionSpec& f, const FunctionSpec& g,
                                    const CanonicalParams& A,
                                    const std::vector<double>& sgrid, AbsMode mode,
                                    const QuadratureConfig& cfg, double tol = 1e-4);

PropertyReport check_parity_split(const FunctionSpec& f, const CanonicalParams& A,
                                  const std::vector<double>& sgrid,
                                  const QuadratureConfig& cfg, double tol = 1e-12);

PropertyReport check_roundtrip(const FunctionSpec& f, const CanonicalParams& A,
                               const std::vector<double>& tgrid,
                               const QuadratureConfig& cfg, double tol = 1e-4);

struct SemigroupReport {
  PropertyReport commutativity;
  PropertyReport associativity;
};

SemigroupReport check_semigroup(ConvKind kind, const FunctionSpec& f,
                                const FunctionSpec& g, const FunctionSpec& h,
                                const CanonicalParams& A,
                                const std::vector<double>& tgrid,
                                const QuadratureConfig& cfg,
                                double comm_tol = 1e-8, double assoc_tol = 1e-6);

// ||f o delta_n - f||_1 over the schedule; passes when the sequence is
// non-increasing and the final norm is <= tol.
PropertyReport check_approx_identity(const FunctionSpec& f, const DeltaSeqSpec& den,
                                     ConvKind kind, const std::vector<int>& schedule,
                                     const QuadratureConfig& cfg, double tol = 1e-2);

// sup_{s in [-2,2]} |sqrt(2 pi i b) e^{-(i/2)(d/b)s^2} C_A(delta_n)(s) - 1|
// over the schedule; non-increasing and <= tol at the deepest index.
PropertyReport check_delta_transform(const DeltaSeqSpec& den,
                                     const std::vector<int>& schedule,
                                     const QuadratureConfig& cfg, double tol = 0.1);

// Direct midpoint-rule Fourier sum of the truncated signal; an evaluation
// path independent of the transform plans, used to cross-check the
// Fourier-parameter LCT.
Complex dft_oracle_point(const FunctionSpec& f, double s, double trunc, int n);

PropertyReport check_fourier_oracle(const FunctionSpec& f,
                                    const std::vector<double>& sgrid,
                                    const QuadratureConfig& cfg, double tol = 1e-4);

struct CorpusEntry {
  std::string name;
  FunctionSpec spec;
};

// Fixed in-repo test corpus: three analytic signals, two |t| reflections and
// twenty seeded random tabulated signals.
const std::vector<CorpusEntry>& test_corpus();

struct SuiteResult {
  std::vector<PropertyReport> reports;
  bool all_pass = false;
};

// name in {conv-theorems, identities, semigroup, delta, roundtrip, all}.
SuiteResult run_suite(const std::string& name, const CanonicalParams& A, AbsMode mode,
                      const QuadratureConfig& cfg, bool cfg_overridden);

std::vector<std::string> suite_names();

}  // namespace canonx
