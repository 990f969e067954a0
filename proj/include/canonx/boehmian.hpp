#pragma once

#include <functional>
#include <string>
#include <vector>

#include "canonx/delta.hpp"
#include "canonx/transforms.hpp"

namespace canonx {

// Index -> delta-sequence term. Either a primitive family or the pairwise
// convolution of two families (denominators of binary algebra results).
struct DeltaFamily {
  std::function<FunctionSpec(int)> term;
  std::string desc;

  static DeltaFamily primitive(const DeltaSeqSpec& spec);
  static DeltaFamily convolved(const DeltaFamily& a, const DeltaFamily& b, ConvKind kind,
                               const CanonicalParams& A, AbsMode mode);
};

// Finite-depth quotient of sequences: numerator generator over n >= 1 against
// a delta-sequence denominator, under one of the two products. Generators
// must be pure (same n -> same spec).
struct Boehmian {
  std::function<FunctionSpec(int)> numerator;
  DeltaFamily denominator;
  ConvKind kind = ConvKind::star;
  int depth = 2;
  CanonicalParams params = fourier_params();
  AbsMode mode = AbsMode::signed_arg;
  std::string desc;
};

// [f o delta_n / delta_n]; the quotient property holds by the semigroup laws.
Boehmian embed(const FunctionSpec& f, const DeltaSeqSpec& den, ConvKind kind, int depth,
               AbsMode mode = AbsMode::signed_arg);

struct QuotientReport {
  double max_residual = 0.0;
  int pairs_checked = 0;
  bool pass = false;
};

// Interchange identity f_m o d_n = f_n o d_m over all pairs m < n <= depth,
// max abs difference on a 9-point t-grid.
QuotientReport quotient_check(const Boehmian& B, const QuadratureConfig& cfg, double tol);

// Cross identity f_n o psi_n = g_n o phi_n for n <= min depth.
bool equivalence_check(const Boehmian& B1, const Boehmian& B2,
                       const QuadratureConfig& cfg, double tol);

Boehmian algebra_scale(Complex lambda, const Boehmian& B);
Boehmian algebra_add(const Boehmian& B1, const Boehmian& B2);
Boehmian algebra_convolve(const Boehmian& B1, const Boehmian& B2);

struct TransformedBoehmian {
  std::vector<double> grid;
  std::vector<int> indices;  // dyadic up to depth
  std::vector<SampledField> numerator_fields;
  std::vector<SampledField> denominator_fields;

  // Pointwise numerator/denominator at indices[i]; the canonical comparable
  // form of a transformed Boehmian.
  SampledField ratio(std::size_t i) const;
};

// CCT of a star-Boehmian or CST of a theta-Boehmian; the denominator fields
// are always CCT of the delta terms. Throws DenominatorNearZero when
// |C_A(delta_n)(s)| < 1e-6 at an evaluated node.
TransformedBoehmian transform_boehmian(const Boehmian& B, TransformKind which,
                                       const std::vector<double>& sgrid,
                                       const QuadratureConfig& cfg);

struct LimitReport {
  SampledField deepest;
  std::vector<double> sup_deltas;  // between successive schedule entries
  bool monotone = false;
};

LimitReport limit_estimate(const TransformedBoehmian& TB, const std::vector<int>& schedule);

struct DeltaLimReport {
  std::vector<double> norms;  // ||(B_k - B) o delta_n*||_1 per k
  int probe_index = 0;
  bool decreasing = false;
};

// delta-convergence probe at the deepest shared index; requires a shared kind.
DeltaLimReport delta_lim_check(const std::vector<Boehmian>& seq, const Boehmian& B,
                               const QuadratureConfig& cfg, double tol);

}  // namespace canonx
