#pragma once

#include <vector>

#include "canonx/convolution.hpp"
#include "canonx/funcspec.hpp"

namespace canonx {

enum class DeltaFamilyKind { triangular };

// One-parameter family of chirp-weighted mollifiers; `x` is the modulation
// parameter of the triangular example, `params` supplies the a/b rate.
struct DeltaSeqSpec {
  DeltaFamilyKind family = DeltaFamilyKind::triangular;
  double x = 0.0;
  CanonicalParams params;
};

// e^{-i(a/b)xt} n^2 t on [0,1/n], e^{-i(a/b)xt} n^2 (2/n - t) on [1/n,2/n].
FunctionSpec triangular_delta(const DeltaSeqSpec& spec, int n);
FunctionSpec delta_term(const DeltaSeqSpec& spec, int n);

struct DeltaAxiomReport {
  std::vector<int> checked_n;
  std::vector<double> unit_integral_residuals;
  double norm_bound = 0.0;  // max_n ||delta_n||_1
  std::vector<double> epsilons;
  std::vector<std::vector<double>> tail_mass;  // [epsilon index][n index]
  double unit_tol = 0.0;
  bool pass = false;
};

// Dyadic n in {1, 2, 4, ..., n_max}: unit-integral residual
// |\int e^{i(a/b)xt} delta_n(t) dt - 1|, L1 norms, and tail mass beyond
// eps in {0.5, 0.1, 0.02}. Throws UnderResolved unless the quadrature step
// resolves the [0, 2/n] spike (step <= 1/(8n)).
DeltaAxiomReport check_axioms(const DeltaSeqSpec& spec, int n_max,
                              const QuadratureConfig& cfg);

// Same axioms applied to the sequence phi_n (*) psi_n for (*) in {star, theta};
// unit-integral tolerance loosened to 1e-4 (nested quadrature).
DeltaAxiomReport star_closure_check(const DeltaSeqSpec& s1, const DeltaSeqSpec& s2,
                                    ConvKind kind, int n_max,
                                    const QuadratureConfig& cfg);

std::vector<int> dyadic_schedule(int n_max);

}  // namespace canonx
