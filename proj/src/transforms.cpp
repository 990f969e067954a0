#include "canonx/transforms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace canonx {

const char* transform_kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::lct: return "lct";
    case TransformKind::cct: return "cct";
    case TransformKind::cst: return "cst";
  }
  return "?";
}

Complex root_two_pi_ib(double b) {
  return std::sqrt(Complex(0.0, 2.0 * std::numbers::pi * b));
}

Complex lct_prefactor(const CanonicalParams& A, double s) {
  const double ph = 0.5 * (A.d() / A.b()) * s * s;
  return Complex(std::cos(ph), std::sin(ph)) / root_two_pi_ib(A.b());
}

int oscillation_floor(const CanonicalParams& A, double max_abs_s,
                      const QuadratureConfig& cfg) {
  const double babs = std::abs(A.b());
  const double nu =
      std::max(max_abs_s / babs, std::abs(A.a() / A.b()) * cfg.trunc);
  return static_cast<int>(std::ceil(8.0 * cfg.trunc * nu / std::numbers::pi));
}

void require_resolved(const CanonicalParams& A, double max_abs_s,
                      const QuadratureConfig& cfg) {
  const int need = oscillation_floor(A, max_abs_s, cfg);
  if (cfg.points < need) {
    std::ostringstream os;
    os << "kernel frequency needs N >= " << need << " on [-" << cfg.trunc << ","
       << cfg.trunc << "], got " << cfg.points;
    fail(Errc::under_resolved, os.str());
  }
}

namespace {

// Node layout plus trapezoid-weighted chirp samples w_j e^{(i/2)(a/b)t_j^2} f(t_j),
// shared by every grid point of one transform call.
struct Plan {
  std::vector<double> nodes;
  std::vector<Complex> fw;
  double inv_b = 0.0;
};

Plan build_plan(const FunctionSpec& f, const CanonicalParams& A,
                const QuadratureConfig& cfg, bool parallel) {
  Plan plan;
  plan.inv_b = 1.0 / A.b();
  const NodeLayout lay = build_layout(f, cfg);
  plan.nodes.reserve(lay.node_count());
  std::vector<double> wts;
  wts.reserve(lay.node_count());
  for (const NodeLayout::Piece& p : lay.pieces) {
    const double h = (p.hi - p.lo) / p.panels;
    for (int j = 0; j <= p.panels; ++j) {
      plan.nodes.push_back(j == p.panels ? p.hi : p.lo + j * h);
      wts.push_back((j == 0 || j == p.panels) ? 0.5 * h : h);
    }
  }
  const QuadratureConfig ambient = cfg.nested();
  const double rate = A.chirp_rate();
  plan.fw.resize(plan.nodes.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(plan.nodes.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const double t = plan.nodes[j];
      const double ph = 0.5 * rate * t * t;
      plan.fw[j] = wts[j] * Complex(std::cos(ph), std::sin(ph)) * f.eval_at(t, ambient);
    }
  } else {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      const double t = plan.nodes[j];
      const double ph = 0.5 * rate * t * t;
      plan.fw[j] = wts[j] * Complex(std::cos(ph), std::sin(ph)) * f.eval_at(t, ambient);
    }
  }
  return plan;
}

// The lct value is assembled as cct - i*cst from the shared cosine/sine sums,
// so the kernel parity split e^{-ist/b} = cos(st/b) - i sin(st/b) holds
// exactly on identical nodes.
Complex plan_point(const Plan& plan, TransformKind kind, const CanonicalParams& A,
                   double s) {
  const double w = s * plan.inv_b;
  const Complex pref = lct_prefactor(A, s);
  if (kind == TransformKind::cct || kind == TransformKind::lct) {
    Complex acc_c{};
    for (std::size_t j = 0; j < plan.nodes.size(); ++j)
      acc_c += std::cos(w * plan.nodes[j]) * plan.fw[j];
    if (kind == TransformKind::cct) return pref * acc_c;
    Complex acc_s{};
    for (std::size_t j = 0; j < plan.nodes.size(); ++j)
      acc_s += std::sin(w * plan.nodes[j]) * plan.fw[j];
    return pref * acc_c - Complex(0.0, 1.0) * (pref * acc_s);
  }
  Complex acc_s{};
  for (std::size_t j = 0; j < plan.nodes.size(); ++j)
    acc_s += std::sin(w * plan.nodes[j]) * plan.fw[j];
  return pref * acc_s;
}

Complex lct_point_b0(const FunctionSpec& f, const CanonicalParams& A, double s,
                     const QuadratureConfig& cfg) {
  if (A.d() < 0.0)
    fail(Errc::negative_d_under_root, "b = 0 branch needs d >= 0 for sqrt(d)");
  const double ph = 0.5 * A.c() * A.d() * s * s;
  return std::sqrt(A.d()) * Complex(std::cos(ph), std::sin(ph)) *
         f.eval_at(A.d() * s, cfg.nested());
}

Complex point_impl(const FunctionSpec& f, const CanonicalParams& A, TransformKind kind,
                   double s, const QuadratureConfig& cfg) {
  if (A.b_is_zero()) {
    if (kind != TransformKind::lct)
      fail(Errc::b_zero, std::string(transform_kind_name(kind)) + " undefined for b = 0");
    return lct_point_b0(f, A, s, cfg);
  }
  require_resolved(A, std::abs(s), cfg);
  const Plan plan = build_plan(f, A, cfg, /*parallel=*/false);
  return plan_point(plan, kind, A, s);
}

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) fail(Errc::empty_grid, "transform grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      fail(Errc::usage, "transform grid must be strictly ascending");
}

double max_abs(const std::vector<double>& grid) {
  return std::max(std::abs(grid.front()), std::abs(grid.back()));
}

}  // namespace

Complex lct_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg) {
  return point_impl(f, A, TransformKind::lct, s, cfg);
}

Complex cct_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg) {
  return point_impl(f, A, TransformKind::cct, s, cfg);
}

Complex cst_point(const FunctionSpec& f, const CanonicalParams& A, double s,
                  const QuadratureConfig& cfg) {
  return point_impl(f, A, TransformKind::cst, s, cfg);
}

SampledField transform_grid(const FunctionSpec& f, const CanonicalParams& A,
                            TransformKind kind, const std::vector<double>& sgrid,
                            const QuadratureConfig& cfg) {
  check_grid(sgrid);
  SampledField out;
  out.grid = sgrid;
  out.values.resize(sgrid.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(sgrid.size());
  if (A.b_is_zero()) {
    if (kind != TransformKind::lct)
      fail(Errc::b_zero, std::string(transform_kind_name(kind)) + " undefined for b = 0");
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      out.values[i] = lct_point_b0(f, A, sgrid[i], cfg);
    return out;
  }
  require_resolved(A, max_abs(sgrid), cfg);
  const Plan plan = build_plan(f, A, cfg, /*parallel=*/true);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out.values[i] = plan_point(plan, kind, A, sgrid[i]);
  return out;
}

SampledField transform_grid_serial(const FunctionSpec& f, const CanonicalParams& A,
                                   TransformKind kind, const std::vector<double>& sgrid,
                                   const QuadratureConfig& cfg) {
  check_grid(sgrid);
  if (!A.b_is_zero()) require_resolved(A, max_abs(sgrid), cfg);
  SampledField out;
  out.grid = sgrid;
  out.values.reserve(sgrid.size());
  for (double s : sgrid) out.values.push_back(point_impl(f, A, kind, s, cfg));
  return out;
}

SampledField inverse_lct(const FunctionSpec& F, const CanonicalParams& A,
                         const std::vector<double>& tgrid, const QuadratureConfig& cfg) {
  return transform_grid(F, inverse(A), TransformKind::lct, tgrid, cfg);
}

}  // namespace canonx
