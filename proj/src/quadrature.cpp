#include "canonx/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace canonx {

std::size_t NodeLayout::node_count() const {
  std::size_t n = 0;
  for (const Piece& p : pieces) n += static_cast<std::size_t>(p.panels) + 1;
  return n;
}

NodeLayout build_layout(const IntervalSet& domain, std::vector<double> brk,
                        double target_step) {
  NodeLayout lay;
  if (domain.is_all() || domain.is_empty()) {
    if (domain.is_empty()) return lay;
  }
  std::sort(brk.begin(), brk.end());
  for (const IntervalSet::Interval& iv : domain.pieces()) {
    const double len = iv.hi - iv.lo;
    if (!(len > 0.0)) continue;
    std::vector<double> cuts;
    cuts.push_back(iv.lo);
    const double merge_tol = 1e-12 * std::max(1.0, std::abs(iv.lo) + std::abs(iv.hi));
    for (double b : brk) {
      if (b <= iv.lo + merge_tol || b >= iv.hi - merge_tol) continue;
      if (b - cuts.back() > merge_tol) cuts.push_back(b);
    }
    cuts.push_back(iv.hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i], hi = cuts[i + 1];
      const int panels =
          std::max(1, static_cast<int>(std::ceil((hi - lo) / target_step - 1e-9)));
      lay.pieces.push_back({lo, hi, panels});
    }
  }
  return lay;
}

NodeLayout build_layout(const FunctionSpec& f, const QuadratureConfig& cfg) {
  const IntervalSet dom = f.support().clip(-cfg.trunc, cfg.trunc);
  std::vector<double> brk;
  if (!dom.is_empty()) f.collect_breakpoints(-cfg.trunc, cfg.trunc, brk);
  return build_layout(dom, std::move(brk), cfg.step());
}

Complex integrate(const FunctionSpec& f, const QuadratureConfig& cfg) {
  const NodeLayout lay = build_layout(f, cfg);
  const QuadratureConfig ambient = cfg.nested();
  return trapezoid(lay, [&](double t) { return f.eval_at(t, ambient); });
}

double l1_norm(const FunctionSpec& f, const QuadratureConfig& cfg) {
  const NodeLayout lay = build_layout(f, cfg);
  const QuadratureConfig ambient = cfg.nested();
  return trapezoid(lay, [&](double t) {
           return Complex(std::abs(f.eval_at(t, ambient)), 0.0);
         })
      .real();
}

double l1_norm_outside(const FunctionSpec& f, double eps, const QuadratureConfig& cfg) {
  IntervalSet tails = IntervalSet::of_pieces(
      {{-cfg.trunc, -eps}, {eps, cfg.trunc}});
  const IntervalSet dom = f.support().clip(-cfg.trunc, cfg.trunc).intersect(tails);
  std::vector<double> brk;
  if (!dom.is_empty()) f.collect_breakpoints(-cfg.trunc, cfg.trunc, brk);
  const NodeLayout lay = build_layout(dom, std::move(brk), cfg.step());
  const QuadratureConfig ambient = cfg.nested();
  return trapezoid(lay, [&](double t) {
           return Complex(std::abs(f.eval_at(t, ambient)), 0.0);
         })
      .real();
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) fail(Errc::usage, "linspace needs n >= 2");
  if (!(lo < hi)) fail(Errc::usage, "linspace needs lo < hi");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + i * h;
  g.back() = hi;
  return g;
}

}  // namespace canonx
