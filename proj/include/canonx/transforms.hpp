#pragma once

#include "canonx/funcspec.hpp"
#include "canonx/params.hpp"
#include "canonx/quadrature.hpp"

namespace canonx {

enum class TransformKind { lct, cct, cst };

const char* transform_kind_name(TransformKind k);

// Principal branch of sqrt(2*pi*i*b); every transform and every
// convolution-theorem prefactor goes through this one routine so the branch
// choice cancels in residuals.
Complex root_two_pi_ib(double b);

// e^{(i/2)(d/b) s^2} / sqrt(2 pi i b); requires b != 0.
Complex lct_prefactor(const CanonicalParams& A, double s);

// Nyquist-style node floor: N >= ceil(8 T nu / pi) with
// nu = max(|s|/|b|, |a/b| T). Throws UnderResolved when cfg is below it.
int oscillation_floor(const CanonicalParams& A, double max_abs_s,
                      const QuadratureConfig& cfg);
void require_resolved(const CanonicalParams& A, double max_abs_s,
                      const QuadratureConfig& cfg);

Complex lct_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg);
Complex cct_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg);
Complex cst_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg);

// Batch of the point transforms on an ascending grid. The parallel kernel
// shares one node layout and chirp-weighted sample of f across all grid
// points and splits the points over threads; per-point sums stay serial, so
// output is independent of the thread count. transform_grid_serial is the
// straightforward reference (point ops in a loop) kept for testing.
SampledField transform_grid(const FunctionSpec& f, const CanonicalParams& A,
                            TransformKind kind, const std::vector<double>& sgrid,
                            const QuadratureConfig& cfg);
SampledField transform_grid_serial(const FunctionSpec& f, const CanonicalParams& A,
                                   TransformKind kind, const std::vector<double>& sgrid,
                                   const QuadratureConfig& cfg);

// Forward LCT with the inverse parameter matrix (d, -b, -c, a).
SampledField inverse_lct(const FunctionSpec& F, const CanonicalParams& A,
                         const std::vector<double>& tgrid, const QuadratureConfig& cfg);

}  // namespace canonx
