#pragma once

#include <cstddef>
#include <vector>

#include "canonx/funcspec.hpp"

namespace canonx {

// Trapezoid node layout over the clipped support of an integrand. Panel
// boundaries are snapped to declared breakpoints so piecewise-linear segments
// integrate exactly; node density matches the nominal 2*trunc/points step.
struct NodeLayout {
  struct Piece {
    double lo, hi;
    int panels;
  };
  std::vector<Piece> pieces;

  std::size_t node_count() const;
  bool empty() const { return pieces.empty(); }
};

NodeLayout build_layout(const FunctionSpec& f, const QuadratureConfig& cfg);
NodeLayout build_layout(const IntervalSet& domain, std::vector<double> breakpoints,
                        double target_step);

// Trapezoid sum over a layout; fn is evaluated at nodes in ascending order,
// accumulation order is fixed, so results are reproducible bit for bit.
template <class F>
Complex trapezoid(const NodeLayout& lay, F&& fn) {
  Complex acc{};
  for (const NodeLayout::Piece& p : lay.pieces) {
    const double h = (p.hi - p.lo) / p.panels;
    Complex piece = 0.5 * (fn(p.lo) + fn(p.hi));
    for (int j = 1; j < p.panels; ++j) piece += fn(p.lo + j * h);
    acc += h * piece;
  }
  return acc;
}

// Integral of f over [-trunc, trunc] (clipped to the support of f). Nested
// lazily-integrating nodes receive a quarter of the node budget.
Complex integrate(const FunctionSpec& f, const QuadratureConfig& cfg);

double l1_norm(const FunctionSpec& f, const QuadratureConfig& cfg);

// L1 mass of f outside [-eps, eps], within the truncation window.
double l1_norm_outside(const FunctionSpec& f, double eps, const QuadratureConfig& cfg);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace canonx
