#include "canonx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "canonx/quadrature.hpp"

namespace canonx {

namespace {

Complex unit_phase(double ph) { return Complex(std::cos(ph), std::sin(ph)); }

// sqrt(2 pi i b) e^{-(i/2)(d/b)s^2}: the normalization every convolution
// theorem and extended-transform identity carries.
Complex conv_theorem_prefactor(const CanonicalParams& A, double s) {
  return root_two_pi_ib(A.b()) * unit_phase(-0.5 * (A.d() / A.b()) * s * s);
}

std::vector<double> shifted(const std::vector<double>& grid, double dv) {
  std::vector<double> out = grid;
  for (double& s : out) s += dv;
  return out;
}

std::vector<double> scaled(const std::vector<double>& grid, double k) {
  std::vector<double> out = grid;
  for (double& s : out) s /= k;
  if (k < 0.0) std::reverse(out.begin(), out.end());
  return out;
}

struct Form {
  std::string name;
  std::vector<Complex> values;
};

PropertyReport adjudicated_report(std::string name, const CanonicalParams& A,
                                  std::vector<std::string> inputs, AbsMode mode,
                                  const QuadratureConfig& cfg,
                                  const std::vector<double>& grid,
                                  const std::vector<Complex>& lhs,
                                  const std::vector<Form>& forms, double tol) {
  PropertyReport rep;
  rep.name = std::move(name);
  rep.params = A.quad();
  rep.inputs = std::move(inputs);
  rep.abs_mode = abs_mode_name(mode);
  rep.grid_cfg = cfg;
  rep.grid = grid;
  rep.tolerance = tol;

  std::size_t best = 0;
  double best_max = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> all_res(forms.size());
  Adjudication adj;
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    all_res[fi].resize(grid.size());
    double m = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      all_res[fi][i] = std::abs(lhs[i] - forms[fi].values[i]);
      m = std::max(m, all_res[fi][i]);
    }
    adj.residuals.emplace_back(forms[fi].name, m);
    if (m < best_max) {
      best_max = m;
      best = fi;
    }
  }
  rep.residuals = all_res[best];
  if (forms.size() > 1) {
    adj.chosen = forms[best].name;
    rep.adjudication = std::move(adj);
  }
  rep.finalize();
  return rep;
}

std::vector<Complex> field_of(const FunctionSpec& f, const CanonicalParams& A,
                              TransformKind kind, const std::vector<double>& grid,
                              const QuadratureConfig& cfg) {
  return transform_grid(f, A, kind, grid, cfg).values;
}

}  // namespace

IdentityWhich identity_at(int i) { return static_cast<IdentityWhich>(i); }

const char* identity_name(IdentityWhich which) {
  switch (which) {
    case IdentityWhich::cct_linearity: return "cct_linearity";
    case IdentityWhich::cct_convolution: return "cct_convolution";
    case IdentityWhich::cct_scaling: return "cct_scaling";
    case IdentityWhich::cct_translation: return "cct_translation";
    case IdentityWhich::cct_cexp_split: return "cct_cexp_split";
    case IdentityWhich::cct_cos_product: return "cct_cos_product";
    case IdentityWhich::cct_sin_product: return "cct_sin_product";
    case IdentityWhich::cst_linearity: return "cst_linearity";
    case IdentityWhich::cst_convolution: return "cst_convolution";
    case IdentityWhich::cst_scaling: return "cst_scaling";
    case IdentityWhich::cst_shifting: return "cst_shifting";
    case IdentityWhich::cst_cexp_split: return "cst_cexp_split";
    case IdentityWhich::cst_cos_product: return "cst_cos_product";
    case IdentityWhich::cst_sin_product: return "cst_sin_product";
  }
  return "?";
}

namespace {

bool is_cst(IdentityWhich which) {
  return static_cast<int>(which) >= static_cast<int>(IdentityWhich::cst_linearity);
}

}  // namespace

IdentityArgs generic_identity_args(IdentityWhich which, const CanonicalParams& A) {
  IdentityArgs args{
      is_cst(which) ? fs::gaussian_moment(1.0) : fs::gaussian(1.0, 0.0),
      fs::gaussian(1.0, 0.0),
      A,
      Complex(2.0, 1.0),
      2.0,
      0.7,
      0.5,
      AbsMode::signed_arg,
      linspace(-3.0, 3.0, 13)};
  if (which == IdentityWhich::cct_convolution) args.g = fs::gaussian(2.0, 0.0);
  return args;
}

IdentityArgs degenerate_identity_args(IdentityWhich which, const CanonicalParams& A) {
  IdentityArgs args = generic_identity_args(which, A);
  args.lambda = Complex(1.0, 0.0);
  args.k = 1.0;
  args.tau = 0.0;
  args.x = 0.0;
  args.g = fs::zero();
  return args;
}

PropertyReport check_identity(IdentityWhich which, const IdentityArgs& args,
                              const QuadratureConfig& cfg, double tol) {
  const CanonicalParams& A = args.A;
  const double b = A.b(), d = A.d();
  const double rate = A.chirp_rate();
  const std::vector<double>& S = args.s_grid;
  const TransformKind side = is_cst(which) ? TransformKind::cst : TransformKind::cct;

  std::vector<Complex> lhs;
  std::vector<Form> forms;
  std::vector<std::string> inputs{args.f.describe()};

  auto combine = [&](const std::vector<Complex>& base,
                     auto&& fn) -> std::vector<Complex> {
    std::vector<Complex> out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) out[i] = fn(S[i], i);
    return out;
  };

  switch (which) {
    case IdentityWhich::cct_linearity:
    case IdentityWhich::cst_linearity: {
      inputs.push_back(args.g.describe());
      lhs = field_of(fs::sum(fs::scale(args.lambda, args.f), args.g), A, side, S, cfg);
      const auto F = field_of(args.f, A, side, S, cfg);
      const auto G = field_of(args.g, A, side, S, cfg);
      forms.push_back({"linearity", combine(F, [&](double, std::size_t i) {
                         return args.lambda * F[i] + G[i];
                       })});
      break;
    }
    case IdentityWhich::cct_convolution: {
      inputs.push_back(args.g.describe());
      lhs = field_of(conv_star(args.f, args.g, A, args.mode), A, side, S, cfg);
      const auto F = field_of(args.f, A, side, S, cfg);
      const auto G = field_of(args.g, A, side, S, cfg);
      forms.push_back({"prefactor_product", combine(F, [&](double s, std::size_t i) {
                         return conv_theorem_prefactor(A, s) * F[i] * G[i];
                       })});
      break;
    }
    case IdentityWhich::cst_convolution: {
      inputs.push_back(args.g.describe());
      lhs = field_of(conv_theta(args.f, args.g, A, args.mode), A, side, S, cfg);
      const auto Fs = field_of(args.f, A, TransformKind::cst, S, cfg);
      const auto Gc = field_of(args.g, A, TransformKind::cct, S, cfg);
      const auto Gs = field_of(args.g, A, TransformKind::cst, S, cfg);
      forms.push_back({"sine_cosine", combine(Fs, [&](double s, std::size_t i) {
                         return conv_theorem_prefactor(A, s) * Fs[i] * Gc[i];
                       })});
      forms.push_back({"sine_sine", combine(Fs, [&](double s, std::size_t i) {
                         return conv_theorem_prefactor(A, s) * Fs[i] * Gs[i];
                       })});
      break;
    }
    case IdentityWhich::cct_scaling:
    case IdentityWhich::cst_scaling: {
      const double k = args.k;
      if (k == 0.0) fail(Errc::zero_scale, "scaling identity needs k != 0");
      lhs = field_of(fs::dilate(k, args.f), A, side, S, cfg);
      const FunctionSpec inner = fs::chirp((1.0 / (k * k) - 1.0) * rate, args.f);
      const auto F = transform_grid(inner, A, side, scaled(S, k), cfg);
      forms.push_back({"scaling", combine(F.values, [&](double s, std::size_t i) {
                         const std::size_t src = k < 0.0 ? S.size() - 1 - i : i;
                         return (1.0 / k) *
                                unit_phase((1.0 - 1.0 / (k * k)) * 0.5 * (d / b) * s * s) *
                                F.values[src];
                       })});
      break;
    }
    case IdentityWhich::cct_translation: {
      const double tau = args.tau;
      lhs = field_of(fs::translate(-tau, args.f), A, side, S, cfg);
      const FunctionSpec m = fs::modulate_cexp(-rate * tau, args.f);
      const auto Mc = field_of(m, A, TransformKind::cct, S, cfg);
      const auto Ms = field_of(m, A, TransformKind::cst, S, cfg);
      const Complex pre = unit_phase(0.5 * rate * tau * tau);
      forms.push_back({"no_i_on_sine", combine(Mc, [&](double s, std::size_t i) {
                         return pre * (std::cos(s * tau / b) * Mc[i] +
                                       std::sin(s * tau / b) * Ms[i]);
                       })});
      forms.push_back({"i_on_sine", combine(Mc, [&](double s, std::size_t i) {
                         return pre * (std::cos(s * tau / b) * Mc[i] +
                                       Complex(0.0, 1.0) * std::sin(s * tau / b) * Ms[i]);
                       })});
      break;
    }
    case IdentityWhich::cst_shifting: {
      const double tau = args.tau;
      lhs = field_of(fs::translate(-tau, args.f), A, side, S, cfg);
      const FunctionSpec m = fs::modulate_cexp(-rate * tau, args.f);
      const auto Mc = field_of(m, A, TransformKind::cct, S, cfg);
      const auto Ms = field_of(m, A, TransformKind::cst, S, cfg);
      const Complex pre = unit_phase(0.5 * rate * tau * tau);
      forms.push_back({"shifting", combine(Mc, [&](double s, std::size_t i) {
                         return pre * (std::cos(s * tau / b) * Ms[i] -
                                       std::sin(s * tau / b) * Mc[i]);
                       })});
      break;
    }
    case IdentityWhich::cct_cexp_split:
    case IdentityWhich::cst_cexp_split: {
      const double x = args.x;
      lhs = field_of(fs::modulate_cexp(x, args.f), A, side, S, cfg);
      const auto C = field_of(fs::modulate_cos(x, args.f), A, side, S, cfg);
      const auto Sn = field_of(fs::modulate_sin(x, args.f), A, side, S, cfg);
      forms.push_back({"cos_plus_i_sin", combine(C, [&](double, std::size_t i) {
                         return C[i] + Complex(0.0, 1.0) * Sn[i];
                       })});
      break;
    }
    case IdentityWhich::cct_cos_product:
    case IdentityWhich::cst_cos_product: {
      const double x = args.x;
      lhs = field_of(fs::modulate_cos(x, args.f), A, side, S, cfg);
      const auto Up = transform_grid(args.f, A, side, shifted(S, b * x), cfg);
      const auto Dn = transform_grid(args.f, A, side, shifted(S, -b * x), cfg);
      forms.push_back({"neg_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(-0.5 * d * b * x * x) *
                                (unit_phase(-d * x * s) * Up.values[i] +
                                 unit_phase(d * x * s) * Dn.values[i]);
                       })});
      forms.push_back({"pos_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(0.5 * d * b * x * x) *
                                (unit_phase(d * x * s) * Up.values[i] +
                                 unit_phase(-d * x * s) * Dn.values[i]);
                       })});
      break;
    }
    case IdentityWhich::cct_sin_product: {
      const double x = args.x;
      lhs = field_of(fs::modulate_sin(x, args.f), A, side, S, cfg);
      const auto Up = transform_grid(args.f, A, TransformKind::cst, shifted(S, b * x), cfg);
      const auto Dn = transform_grid(args.f, A, TransformKind::cst, shifted(S, -b * x), cfg);
      forms.push_back({"neg_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(-0.5 * d * b * x * x) *
                                (unit_phase(-d * x * s) * Up.values[i] -
                                 unit_phase(d * x * s) * Dn.values[i]);
                       })});
      forms.push_back({"pos_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(0.5 * d * b * x * x) *
                                (unit_phase(d * x * s) * Up.values[i] -
                                 unit_phase(-d * x * s) * Dn.values[i]);
                       })});
      break;
    }
    case IdentityWhich::cst_sin_product: {
      const double x = args.x;
      lhs = field_of(fs::modulate_sin(x, args.f), A, side, S, cfg);
      const auto Up = transform_grid(args.f, A, TransformKind::cct, shifted(S, b * x), cfg);
      const auto Dn = transform_grid(args.f, A, TransformKind::cct, shifted(S, -b * x), cfg);
      forms.push_back({"neg_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(-0.5 * d * b * x * x) *
                                (unit_phase(d * x * s) * Dn.values[i] -
                                 unit_phase(-d * x * s) * Up.values[i]);
                       })});
      forms.push_back({"pos_chirp", combine(Up.values, [&](double s, std::size_t i) {
                         return 0.5 * unit_phase(0.5 * d * b * x * x) *
                                (unit_phase(-d * x * s) * Dn.values[i] -
                                 unit_phase(d * x * s) * Up.values[i]);
                       })});
      break;
    }
  }

  return adjudicated_report(identity_name(which), A, std::move(inputs), args.mode, cfg,
                            S, lhs, forms, tol);
}

PropertyReport check_cc_convolution(const FunctionSpec& f, const FunctionSpec& g,
                                    const CanonicalParams& A,
                                    const std::vector<double>& sgrid, AbsMode mode,
                                    const QuadratureConfig& cfg, double tol) {
  const auto lhs = field_of(conv_star(f, g, A, mode), A, TransformKind::cct, sgrid, cfg);
  const auto F = field_of(f, A, TransformKind::cct, sgrid, cfg);
  const auto G = field_of(g, A, TransformKind::cct, sgrid, cfg);
  std::vector<Complex> rhs(sgrid.size());
  for (std::size_t i = 0; i < sgrid.size(); ++i)
    rhs[i] = conv_theorem_prefactor(A, sgrid[i]) * F[i] * G[i];
  return adjudicated_report("cc_convolution_theorem", A,
                            {f.describe(), g.describe()}, mode, cfg, sgrid, lhs,
                            {{"prefactor_product", rhs}}, tol);
}

PropertyReport check_cs_convolution(const FunctionSpec& f, const FunctionSpec& g,
                                    const CanonicalParams& A,
                                    const std::vector<double>& sgrid, AbsMode mode,
                                    const QuadratureConfig& cfg, double tol) {
  const auto lhs = field_of(conv_theta(f, g, A, mode), A, TransformKind::cst, sgrid, cfg);
  const auto Fs = field_of(f, A, TransformKind::cst, sgrid, cfg);
  const auto Gc = field_of(g, A, TransformKind::cct, sgrid, cfg);
  std::vector<Complex> rhs(sgrid.size());
  for (std::size_t i = 0; i < sgrid.size(); ++i)
    rhs[i] = conv_theorem_prefactor(A, sgrid[i]) * Fs[i] * Gc[i];
  return adjudicated_report("cs_convolution_theorem", A,
                            {f.describe(), g.describe()}, mode, cfg, sgrid, lhs,
                            {{"sine_cosine", rhs}}, tol);
}

PropertyReport check_parity_split(const FunctionSpec& f, const CanonicalParams& A,
                                  const std::vector<double>& sgrid,
                                  const QuadratureConfig& cfg, double tol) {
  const auto L = field_of(f, A, TransformKind::lct, sgrid, cfg);
  const auto C = field_of(f, A, TransformKind::cct, sgrid, cfg);
  const auto Sn = field_of(f, A, TransformKind::cst, sgrid, cfg);
  std::vector<Complex> rhs(sgrid.size());
  for (std::size_t i = 0; i < sgrid.size(); ++i)
    rhs[i] = C[i] - Complex(0.0, 1.0) * Sn[i];
  return adjudicated_report("parity_split", A, {f.describe()}, AbsMode::signed_arg, cfg,
                            sgrid, L, {{"cct_minus_i_cst", rhs}}, tol);
}

PropertyReport check_roundtrip(const FunctionSpec& f, const CanonicalParams& A,
                               const std::vector<double>& tgrid,
                               const QuadratureConfig& cfg, double tol) {
  // Forward field tabulated on [-2T, 2T] at the working node density, then
  // inverted with the doubled window so the tabulated tail is covered.
  const int n_tab = 2 * cfg.points;
  const auto sgrid = linspace(-2.0 * cfg.trunc, 2.0 * cfg.trunc, n_tab + 1);
  const SampledField fwd = transform_grid(f, A, TransformKind::lct, sgrid, cfg);
  const FunctionSpec tab = fs::tabulated(fwd.grid, fwd.values);
  const QuadratureConfig inv_cfg{2.0 * cfg.trunc, 2 * cfg.points, cfg.tol};
  const SampledField back = inverse_lct(tab, A, tgrid, inv_cfg);
  std::vector<Complex> lhs = back.values;
  std::vector<Complex> rhs(tgrid.size());
  for (std::size_t i = 0; i < tgrid.size(); ++i) rhs[i] = f(tgrid[i]);
  PropertyReport rep = adjudicated_report("lct_roundtrip", A, {f.describe()},
                                          AbsMode::signed_arg, cfg, tgrid, lhs,
                                          {{"identity", rhs}}, tol);
  rep.grid_label = "t";
  return rep;
}

SemigroupReport check_semigroup(ConvKind kind, const FunctionSpec& f,
                                const FunctionSpec& g, const FunctionSpec& h,
                                const CanonicalParams& A,
                                const std::vector<double>& tgrid,
                                const QuadratureConfig& cfg, double comm_tol,
                                double assoc_tol) {
  const FunctionSpec fg = convolve(kind, f, g, A);
  const FunctionSpec gf = convolve(kind, g, f, A);
  const FunctionSpec fg_h = convolve(kind, fg, h, A);
  const FunctionSpec gh = convolve(kind, g, h, A);
  const FunctionSpec f_gh = convolve(kind, f, gh, A);

  const QuadratureConfig ambient = cfg;
  std::vector<Complex> comm_l(tgrid.size()), comm_r(tgrid.size());
  std::vector<Complex> asso_l(tgrid.size()), asso_r(tgrid.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(tgrid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    comm_l[i] = fg.eval_at(tgrid[i], ambient);
    comm_r[i] = gf.eval_at(tgrid[i], ambient);
    asso_l[i] = fg_h.eval_at(tgrid[i], ambient);
    asso_r[i] = f_gh.eval_at(tgrid[i], ambient);
  }

  SemigroupReport out;
  const std::string base = conv_kind_name(kind);
  out.commutativity = adjudicated_report(
      base + "_commutativity", A, {f.describe(), g.describe()}, AbsMode::signed_arg,
      cfg, tgrid, comm_l, {{"swapped", comm_r}}, comm_tol);
  out.commutativity.grid_label = "t";
  out.associativity = adjudicated_report(
      base + "_associativity", A, {f.describe(), g.describe(), h.describe()},
      AbsMode::signed_arg, cfg, tgrid, asso_l, {{"rebracketed", asso_r}}, assoc_tol);
  out.associativity.grid_label = "t";
  return out;
}

namespace {

PropertyReport schedule_report(std::string name, const CanonicalParams& A,
                               std::vector<std::string> inputs,
                               const QuadratureConfig& cfg,
                               const std::vector<int>& schedule,
                               std::vector<double> values, double tol) {
  PropertyReport rep;
  rep.name = std::move(name);
  rep.params = A.quad();
  rep.inputs = std::move(inputs);
  rep.grid_cfg = cfg;
  rep.grid_label = "n";
  for (int n : schedule) rep.grid.push_back(static_cast<double>(n));
  rep.residuals = std::move(values);
  rep.tolerance = tol;
  bool monotone = true;
  for (std::size_t i = 1; i < rep.residuals.size(); ++i)
    if (rep.residuals[i] > rep.residuals[i - 1] + 1e-12) monotone = false;
  rep.max_residual = rep.residuals.empty() ? 0.0 : rep.residuals.back();
  rep.pass = monotone && rep.max_residual <= tol;
  rep.extra.emplace_back("monotone_non_increasing", monotone ? 1.0 : 0.0);
  rep.extra.emplace_back("final_value", rep.max_residual);
  return rep;
}

}  // namespace

PropertyReport check_approx_identity(const FunctionSpec& f, const DeltaSeqSpec& den,
                                     ConvKind kind, const std::vector<int>& schedule,
                                     const QuadratureConfig& cfg, double tol) {
  for (int n : schedule)
    if (cfg.step() > 1.0 / (8.0 * n))
      fail(Errc::under_resolved, "quadrature step cannot resolve the mollifier spike");
  std::vector<double> norms;
  for (int n : schedule) {
    const FunctionSpec conv = convolve(kind, f, delta_term(den, n), den.params);
    norms.push_back(l1_norm(fs::sum(conv, fs::scale(-1.0, f)), cfg));
  }
  PropertyReport rep = schedule_report(
      std::string(conv_kind_name(kind)) + "_approx_identity", den.params,
      {f.describe()}, cfg, schedule, std::move(norms), tol);
  return rep;
}

PropertyReport check_delta_transform(const DeltaSeqSpec& den,
                                     const std::vector<int>& schedule,
                                     const QuadratureConfig& cfg, double tol) {
  const auto sgrid = linspace(-2.0, 2.0, 17);
  std::vector<double> devs;
  for (int n : schedule) {
    const auto field =
        transform_grid(delta_term(den, n), den.params, TransformKind::cct, sgrid, cfg);
    double sup = 0.0;
    for (std::size_t i = 0; i < sgrid.size(); ++i) {
      const Complex normalized =
          conv_theorem_prefactor(den.params, sgrid[i]) * field.values[i];
      sup = std::max(sup, std::abs(normalized - 1.0));
    }
    devs.push_back(sup);
  }
  return schedule_report("delta_transform_to_one", den.params, {"triangular"}, cfg,
                         schedule, std::move(devs), tol);
}

Complex dft_oracle_point(const FunctionSpec& f, double s, double trunc, int n) {
  const double h = 2.0 * trunc / n;
  Complex acc{};
  for (int j = 0; j < n; ++j) {
    const double t = -trunc + (j + 0.5) * h;
    acc += f(t) * Complex(std::cos(s * t), -std::sin(s * t));
  }
  return acc * h / std::sqrt(Complex(0.0, 2.0 * std::numbers::pi));
}

PropertyReport check_fourier_oracle(const FunctionSpec& f,
                                    const std::vector<double>& sgrid,
                                    const QuadratureConfig& cfg, double tol) {
  const CanonicalParams A = fourier_params();
  const auto got = field_of(f, A, TransformKind::lct, sgrid, cfg);
  std::vector<Complex> want(sgrid.size());
  for (std::size_t i = 0; i < sgrid.size(); ++i)
    want[i] = dft_oracle_point(f, sgrid[i], cfg.trunc, 4 * cfg.points);
  return adjudicated_report("fourier_cross_check", A, {f.describe()},
                            AbsMode::signed_arg, cfg, sgrid, got,
                            {{"midpoint_dft", want}}, tol);
}

const std::vector<CorpusEntry>& test_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    c.push_back({"gaussian(1,0)", fs::gaussian(1.0, 0.0)});
    c.push_back({"gaussian(2,0.5)", fs::gaussian(2.0, 0.5)});
    c.push_back({"t_gaussian", fs::gaussian_moment(1.0)});
    c.push_back({"reflect_abs_gaussian", fs::reflect_abs(fs::gaussian(1.0, 0.5))});
    c.push_back({"reflect_abs_t_gaussian", fs::reflect_abs(fs::gaussian_moment(1.0))});
    std::mt19937 rng(240817u);
    auto unit = [&rng]() {
      // raw engine draws keep the corpus identical across platforms
      return static_cast<double>(rng() >> 8) / 8388608.0 - 1.0;
    };
    const auto grid = linspace(-6.0, 6.0, 61);
    for (int k = 0; k < 20; ++k) {
      std::vector<Complex> vals(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double env = std::exp(-grid[i] * grid[i] / 9.0);
        vals[i] = env * Complex(unit(), unit());
      }
      std::ostringstream nm;
      nm << "tabulated_fuzz_" << k;
      c.push_back({nm.str(), fs::tabulated(grid, vals)});
    }
    return c;
  }();
  return corpus;
}

std::vector<std::string> suite_names() {
  return {"conv-theorems", "identities", "semigroup", "delta", "roundtrip", "all"};
}

namespace {

void run_conv_theorems(std::vector<PropertyReport>& out, const CanonicalParams& A,
                       AbsMode mode, const QuadratureConfig& cfg) {
  const auto S = linspace(-4.0, 4.0, 33);
  const auto g10 = fs::gaussian(1.0, 0.0);
  const auto g2 = fs::gaussian(2.0, 0.0);
  const auto odd = fs::gaussian_moment(1.0);
  out.push_back(check_cc_convolution(g10, g10, A, S, mode, cfg));
  out.push_back(check_cc_convolution(g10, g2, A, S, mode, cfg));
  out.push_back(check_cs_convolution(odd, g10, A, S, mode, cfg));
  out.push_back(check_cs_convolution(g2, g10, A, S, mode, cfg));

  // Which reading of the shifted-difference argument satisfies the theorem:
  // run the same check under both modes on a pair with a non-even second
  // operand, where the readings genuinely differ.
  const auto gofs = fs::gaussian(2.0, 0.5);
  const auto F = transform_grid(g10, A, TransformKind::cct, S, cfg).values;
  const auto G = transform_grid(gofs, A, TransformKind::cct, S, cfg).values;
  std::vector<Complex> rhs(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    rhs[i] = conv_theorem_prefactor(A, S[i]) * F[i] * G[i];
  std::vector<Form> sides;
  sides.push_back(
      {"signed", transform_grid(conv_star(g10, gofs, A, AbsMode::signed_arg), A,
                                TransformKind::cct, S, cfg)
                     .values});
  sides.push_back(
      {"mirrored", transform_grid(conv_star(g10, gofs, A, AbsMode::mirrored), A,
                                  TransformKind::cct, S, cfg)
                       .values});
  out.push_back(adjudicated_report("cc_convolution_abs_mode_adjudication", A,
                                   {g10.describe(), gofs.describe()}, mode, cfg, S, rhs,
                                   sides, 1e-4));
}

void run_identities(std::vector<PropertyReport>& out, const CanonicalParams& A,
                    AbsMode mode, const QuadratureConfig& cfg) {
  for (int i = 0; i < kIdentityCount; ++i) {
    const IdentityWhich which = identity_at(i);
    IdentityArgs degen = degenerate_identity_args(which, A);
    degen.mode = mode;
    PropertyReport r = check_identity(which, degen, cfg, 1e-12);
    r.name += "_degenerate";
    out.push_back(std::move(r));
    IdentityArgs gen = generic_identity_args(which, A);
    gen.mode = mode;
    out.push_back(check_identity(which, gen, cfg, 1e-4));
  }
}

void run_semigroup(std::vector<PropertyReport>& out, const CanonicalParams& A,
                   const QuadratureConfig& cfg) {
  const auto f = fs::gaussian(1.0, 0.0);
  const auto g = fs::gaussian(2.0, 0.0);
  const auto h = fs::gaussian(1.5, 0.0);
  const auto grid = linspace(-2.0, 2.0, 9);
  const CanonicalParams A0 = fourier_params();
  for (ConvKind kind : {ConvKind::star, ConvKind::theta, ConvKind::otimes}) {
    SemigroupReport rep = check_semigroup(kind, f, g, h, A0, grid, cfg);
    out.push_back(std::move(rep.commutativity));
    out.push_back(std::move(rep.associativity));
  }
  // star commutes for arbitrary operands; exercise it with the chirped matrix
  SemigroupReport star_mixed = check_semigroup(ConvKind::star, fs::gaussian_moment(1.0),
                                               g, h, A, grid, cfg);
  star_mixed.commutativity.name = "star_commutativity_mixed";
  out.push_back(std::move(star_mixed.commutativity));
}

void run_delta(std::vector<PropertyReport>& out, const CanonicalParams& A,
               const QuadratureConfig& cfg) {
  DeltaSeqSpec den{DeltaFamilyKind::triangular, 0.0, A};
  const auto schedule = std::vector<int>{4, 8, 16, 32, 64};

  const DeltaAxiomReport ax = check_axioms(den, 64, cfg);
  PropertyReport axr;
  axr.name = "delta_axioms";
  axr.params = A.quad();
  axr.inputs = {"triangular(x=0)"};
  axr.grid_cfg = cfg;
  axr.grid_label = "n";
  for (int n : ax.checked_n) axr.grid.push_back(n);
  axr.residuals = ax.unit_integral_residuals;
  axr.tolerance = 1e-8;
  axr.finalize();
  axr.pass = axr.pass && ax.pass;
  axr.extra.emplace_back("norm_bound", ax.norm_bound);
  for (std::size_t e = 0; e < ax.epsilons.size(); ++e)
    axr.extra.emplace_back("tail_mass_final_eps_" + std::to_string(e),
                           ax.tail_mass[e].back());
  out.push_back(std::move(axr));

  // Closure products are checked in the chirp-free parameterization; the
  // star product keeps the unit integral, the theta product is antisymmetric
  // and its unit integral sits at 0 instead of the claimed 1 - reported as
  // data, gated on the norm bound and tail decay it does satisfy.
  const CanonicalParams A0 = fourier_params();
  DeltaSeqSpec den0{DeltaFamilyKind::triangular, 0.0, A0};
  {
    const DeltaAxiomReport cl = star_closure_check(den0, den0, ConvKind::star, 8, cfg);
    PropertyReport clr;
    clr.name = "star_closure";
    clr.params = A0.quad();
    clr.inputs = {"triangular(x=0)", "triangular(x=0)"};
    clr.grid_cfg = cfg;
    clr.grid_label = "n";
    for (int n : cl.checked_n) clr.grid.push_back(n);
    clr.residuals = cl.unit_integral_residuals;
    clr.tolerance = 1e-4;
    clr.finalize();
    clr.pass = clr.pass && cl.pass;
    clr.extra.emplace_back("norm_bound", cl.norm_bound);
    out.push_back(std::move(clr));
  }
  {
    // theta of identical terms vanishes identically; pair two distinct
    // family members so the norm and tail axioms carry content.
    DeltaSeqSpec den_b{DeltaFamilyKind::triangular, 0.3, A};
    const DeltaAxiomReport cl = star_closure_check(den, den_b, ConvKind::theta, 8, cfg);
    PropertyReport clr;
    clr.name = "theta_closure_partial_axioms";
    clr.params = A.quad();
    clr.inputs = {"triangular(x=0)", "triangular(x=0.3)"};
    clr.grid_cfg = cfg;
    clr.grid_label = "n";
    for (int n : cl.checked_n) clr.grid.push_back(n);
    clr.residuals = cl.tail_mass.front();  // eps = 0.5 tail decay
    clr.tolerance = 1.0;
    bool tails_ok = true;
    for (const auto& tm : cl.tail_mass)
      for (std::size_t i = 1; i < tm.size(); ++i)
        tails_ok = tails_ok && tm[i] <= tm[i - 1] + 1e-12;
    clr.max_residual = clr.residuals.empty() ? 0.0 : clr.residuals.back();
    clr.pass = tails_ok && std::isfinite(cl.norm_bound) && cl.norm_bound <= 1.0 + 1e-6;
    clr.extra.emplace_back("norm_bound", cl.norm_bound);
    clr.extra.emplace_back("unit_integral_residual_final",
                           cl.unit_integral_residuals.back());
    clr.extra.emplace_back("unit_integral_axiom_holds", 0.0);
    out.push_back(std::move(clr));
  }

  out.push_back(
      check_approx_identity(fs::gaussian(1.0, 0.0), den0, ConvKind::star, schedule, cfg));
  out.push_back(check_approx_identity(fs::gaussian_moment(1.0), den0, ConvKind::theta,
                                      schedule, cfg));
  out.push_back(check_delta_transform(den, dyadic_schedule(64), cfg));
}

void run_roundtrip(std::vector<PropertyReport>& out, const CanonicalParams& A,
                   const QuadratureConfig& cfg) {
  const auto tg = linspace(-3.0, 3.0, 25);
  out.push_back(check_roundtrip(fs::gaussian(1.0, 0.0), fourier_params(), tg, cfg));
  out.push_back(check_roundtrip(fs::gaussian(1.0, 0.0), A, tg, cfg));
  const auto S = linspace(-4.0, 4.0, 33);
  for (const CorpusEntry& e : test_corpus()) {
    out.push_back(check_parity_split(e.spec, A, S, cfg));
    out.back().inputs = {e.name};
  }
  out.push_back(check_fourier_oracle(fs::gaussian(1.0, 0.0), S, cfg));
}

}  // namespace

SuiteResult run_suite(const std::string& name, const CanonicalParams& A, AbsMode mode,
                      const QuadratureConfig& cfg, bool cfg_overridden) {
  SuiteResult res;
  // Per-suite defaults: the delta spike guard needs a finer step than the
  // transform suites, which want the wide window.
  const QuadratureConfig transform_cfg =
      cfg_overridden ? cfg : QuadratureConfig::make(12.0, 8192, cfg.tol);
  const QuadratureConfig delta_cfg =
      cfg_overridden ? cfg : QuadratureConfig::make(4.0, 4096, cfg.tol);
  const QuadratureConfig semi_cfg =
      cfg_overridden ? cfg : QuadratureConfig::make(10.0, 2048, cfg.tol);

  if (name == "conv-theorems" || name == "all")
    run_conv_theorems(res.reports, A, mode, transform_cfg);
  if (name == "identities" || name == "all")
    run_identities(res.reports, A, mode, transform_cfg);
  if (name == "semigroup" || name == "all") run_semigroup(res.reports, A, semi_cfg);
  if (name == "delta" || name == "all") run_delta(res.reports, A, delta_cfg);
  if (name == "roundtrip" || name == "all") run_roundtrip(res.reports, A, transform_cfg);
  if (res.reports.empty()) fail(Errc::usage, "unknown suite: " + name);

  res.all_pass = true;
  for (const PropertyReport& r : res.reports) res.all_pass = res.all_pass && r.pass;
  return res;
}

}  // namespace canonx
