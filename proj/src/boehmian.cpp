#include "canonx/boehmian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "canonx/quadrature.hpp"

namespace canonx {

DeltaFamily DeltaFamily::primitive(const DeltaSeqSpec& spec) {
  DeltaFamily fam;
  fam.term = [spec](int n) { return delta_term(spec, n); };
  std::ostringstream os;
  os << "triangular(x=" << spec.x << ")";
  fam.desc = os.str();
  return fam;
}

DeltaFamily DeltaFamily::convolved(const DeltaFamily& a, const DeltaFamily& b,
                                   ConvKind kind, const CanonicalParams& A,
                                   AbsMode mode) {
  DeltaFamily fam;
  fam.term = [a, b, kind, A, mode](int n) {
    return convolve(kind, a.term(n), b.term(n), A, mode);
  };
  fam.desc = std::string(conv_kind_name(kind)) + "(" + a.desc + "," + b.desc + ")";
  return fam;
}

Boehmian embed(const FunctionSpec& f, const DeltaSeqSpec& den, ConvKind kind, int depth,
               AbsMode mode) {
  if (kind != ConvKind::star && kind != ConvKind::theta)
    fail(Errc::kind_mismatch, "Boehmian products are star or theta");
  if (depth < 2) fail(Errc::usage, "embed needs depth >= 2");
  Boehmian B;
  B.denominator = DeltaFamily::primitive(den);
  B.kind = kind;
  B.depth = depth;
  B.params = den.params;
  B.mode = mode;
  const DeltaFamily fam = B.denominator;
  const CanonicalParams A = den.params;
  B.numerator = [f, fam, kind, A, mode](int n) {
    return convolve(kind, f, fam.term(n), A, mode);
  };
  B.desc = "embed(" + f.describe() + "/" + B.denominator.desc + ")";
  return B;
}

namespace {

std::vector<double> probe_grid() { return linspace(-2.0, 2.0, 9); }

double max_abs_diff(const FunctionSpec& u, const FunctionSpec& v,
                    const std::vector<double>& grid, const QuadratureConfig& cfg) {
  // Pointwise probes hand the whole budget to the outermost product.
  double m = 0.0;
  for (double t : grid)
    m = std::max(m, std::abs(u.eval_at(t, cfg) - v.eval_at(t, cfg)));
  return m;
}

}  // namespace

QuotientReport quotient_check(const Boehmian& B, const QuadratureConfig& cfg, double tol) {
  if (B.depth < 2) fail(Errc::usage, "quotient check needs depth >= 2");
  QuotientReport rep;
  const std::vector<double> grid = probe_grid();
  std::vector<std::pair<int, int>> pairs;
  for (int m = 1; m <= B.depth; ++m)
    for (int n = m + 1; n <= B.depth; ++n) pairs.emplace_back(m, n);
  std::vector<double> residuals(pairs.size());
  const std::ptrdiff_t np = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < np; ++i) {
    const auto [m, n] = pairs[static_cast<std::size_t>(i)];
    const FunctionSpec lhs =
        convolve(B.kind, B.numerator(m), B.denominator.term(n), B.params, B.mode);
    const FunctionSpec rhs =
        convolve(B.kind, B.numerator(n), B.denominator.term(m), B.params, B.mode);
    residuals[static_cast<std::size_t>(i)] = max_abs_diff(lhs, rhs, grid, cfg);
  }
  for (double r : residuals) rep.max_residual = std::max(rep.max_residual, r);
  rep.pairs_checked = static_cast<int>(pairs.size());
  rep.pass = rep.max_residual <= tol;
  return rep;
}

bool equivalence_check(const Boehmian& B1, const Boehmian& B2,
                       const QuadratureConfig& cfg, double tol) {
  if (B1.kind != B2.kind)
    fail(Errc::kind_mismatch, "equivalence needs Boehmians over the same product");
  const int depth = std::min(B1.depth, B2.depth);
  const std::vector<double> grid = probe_grid();
  std::vector<double> residuals(static_cast<std::size_t>(depth));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(depth); ++i) {
    const int n = static_cast<int>(i) + 1;
    const FunctionSpec lhs =
        convolve(B1.kind, B1.numerator(n), B2.denominator.term(n), B1.params, B1.mode);
    const FunctionSpec rhs =
        convolve(B1.kind, B2.numerator(n), B1.denominator.term(n), B1.params, B1.mode);
    residuals[static_cast<std::size_t>(i)] = max_abs_diff(lhs, rhs, grid, cfg);
  }
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst <= tol;
}

Boehmian algebra_scale(Complex lambda, const Boehmian& B) {
  Boehmian out = B;
  auto num = B.numerator;
  out.numerator = [lambda, num](int n) { return fs::scale(lambda, num(n)); };
  std::ostringstream os;
  os << "scale(" << lambda.real() << (lambda.imag() < 0 ? "" : "+") << lambda.imag()
     << "i," << B.desc << ")";
  out.desc = os.str();
  return out;
}

Boehmian algebra_add(const Boehmian& B1, const Boehmian& B2) {
  if (B1.kind != B2.kind)
    fail(Errc::kind_mismatch, "addition needs Boehmians over the same product");
  Boehmian out;
  out.kind = B1.kind;
  out.depth = std::min(B1.depth, B2.depth);
  out.params = B1.params;
  out.mode = B1.mode;
  out.denominator = DeltaFamily::convolved(B1.denominator, B2.denominator, B1.kind,
                                           B1.params, B1.mode);
  auto n1 = B1.numerator, n2 = B2.numerator;
  auto d1 = B1.denominator, d2 = B2.denominator;
  const ConvKind kind = B1.kind;
  const CanonicalParams A = B1.params;
  const AbsMode mode = B1.mode;
  out.numerator = [n1, n2, d1, d2, kind, A, mode](int n) {
    return fs::sum(convolve(kind, n1(n), d2.term(n), A, mode),
                   convolve(kind, n2(n), d1.term(n), A, mode));
  };
  out.desc = "add(" + B1.desc + "," + B2.desc + ")";
  return out;
}

Boehmian algebra_convolve(const Boehmian& B1, const Boehmian& B2) {
  if (B1.kind != B2.kind)
    fail(Errc::kind_mismatch, "convolution needs Boehmians over the same product");
  Boehmian out;
  out.kind = B1.kind;
  out.depth = std::min(B1.depth, B2.depth);
  out.params = B1.params;
  out.mode = B1.mode;
  out.denominator = DeltaFamily::convolved(B1.denominator, B2.denominator, B1.kind,
                                           B1.params, B1.mode);
  auto n1 = B1.numerator, n2 = B2.numerator;
  const ConvKind kind = B1.kind;
  const CanonicalParams A = B1.params;
  const AbsMode mode = B1.mode;
  out.numerator = [n1, n2, kind, A, mode](int n) {
    return convolve(kind, n1(n), n2(n), A, mode);
  };
  out.desc = "convolve(" + B1.desc + "," + B2.desc + ")";
  return out;
}

SampledField TransformedBoehmian::ratio(std::size_t i) const {
  SampledField out;
  out.grid = grid;
  out.values.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j)
    out.values[j] = numerator_fields[i].values[j] / denominator_fields[i].values[j];
  return out;
}

TransformedBoehmian transform_boehmian(const Boehmian& B, TransformKind which,
                                       const std::vector<double>& sgrid,
                                       const QuadratureConfig& cfg) {
  if (which == TransformKind::cct && B.kind != ConvKind::star)
    fail(Errc::kind_mismatch, "cct extends star-Boehmians only");
  if (which == TransformKind::cst && B.kind != ConvKind::theta)
    fail(Errc::kind_mismatch, "cst extends theta-Boehmians only");
  if (which == TransformKind::lct)
    fail(Errc::kind_mismatch, "extended transform is cct or cst");
  TransformedBoehmian tb;
  tb.grid = sgrid;
  tb.indices = dyadic_schedule(B.depth);
  for (int n : tb.indices) {
    tb.numerator_fields.push_back(
        transform_grid(B.numerator(n), B.params, which, sgrid, cfg));
    SampledField den =
        transform_grid(B.denominator.term(n), B.params, TransformKind::cct, sgrid, cfg);
    for (std::size_t j = 0; j < den.values.size(); ++j) {
      if (std::abs(den.values[j]) < 1e-6) {
        std::ostringstream os;
        os << "|C_A(delta_" << n << ")(" << sgrid[j] << ")| = " << std::abs(den.values[j]);
        fail(Errc::denominator_near_zero, os.str());
      }
    }
    tb.denominator_fields.push_back(std::move(den));
  }
  return tb;
}

LimitReport limit_estimate(const TransformedBoehmian& TB, const std::vector<int>& schedule) {
  if (schedule.size() < 2) fail(Errc::usage, "limit estimate needs >= 2 schedule entries");
  std::vector<std::size_t> pos;
  for (int n : schedule) {
    auto it = std::find(TB.indices.begin(), TB.indices.end(), n);
    if (it == TB.indices.end()) fail(Errc::usage, "schedule entry not materialized");
    pos.push_back(static_cast<std::size_t>(it - TB.indices.begin()));
  }
  LimitReport rep;
  for (std::size_t i = 1; i < pos.size(); ++i) {
    double sup = 0.0;
    const auto& a = TB.numerator_fields[pos[i - 1]].values;
    const auto& b = TB.numerator_fields[pos[i]].values;
    for (std::size_t j = 0; j < a.size(); ++j) sup = std::max(sup, std::abs(b[j] - a[j]));
    rep.sup_deltas.push_back(sup);
  }
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.sup_deltas.size(); ++i)
    if (rep.sup_deltas[i] > rep.sup_deltas[i - 1] + 1e-12) rep.monotone = false;
  rep.deepest = TB.numerator_fields[pos.back()];
  return rep;
}

DeltaLimReport delta_lim_check(const std::vector<Boehmian>& seq, const Boehmian& B,
                               const QuadratureConfig& cfg, double tol) {
  if (seq.empty()) fail(Errc::usage, "delta_lim_check needs a nonempty sequence");
  int probe = B.depth;
  for (const Boehmian& Bk : seq) {
    if (Bk.kind != B.kind)
      fail(Errc::kind_mismatch, "delta convergence needs a shared product");
    probe = std::min(probe, Bk.depth);
  }
  DeltaLimReport rep;
  rep.probe_index = probe;
  const FunctionSpec dn = B.denominator.term(probe);
  const FunctionSpec base = B.numerator(probe);
  for (const Boehmian& Bk : seq) {
    const FunctionSpec diff = fs::sum(Bk.numerator(probe), fs::scale(-1.0, base));
    const FunctionSpec probe_fn = convolve(B.kind, diff, dn, B.params, B.mode);
    rep.norms.push_back(l1_norm(probe_fn, cfg));
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.norms.size(); ++i)
    if (rep.norms[i] > rep.norms[i - 1] + tol) rep.decreasing = false;
  return rep;
}

}  // namespace canonx
