#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "canonx/errors.hpp"
#include "canonx/params.hpp"

namespace canonx {

using Complex = std::complex<double>;

// Truncated-window quadrature: composite trapezoid on [-trunc, trunc] with
// `points` panels (even, >= 16). `tol` is the default check tolerance carried
// into reports.
struct QuadratureConfig {
  double trunc = 8.0;
  int points = 1024;
  double tol = 1e-8;

  static QuadratureConfig make(double trunc, int points, double tol = 1e-8);

  double step() const { return 2.0 * trunc / points; }

  // Budget handed to integrals nested below this one (quarter of the nodes).
  QuadratureConfig nested() const;
};

QuadratureConfig default_quadrature();

// Union of closed intervals, or all of R. Supports of function specs; used to
// clip quadrature windows.
class IntervalSet {
 public:
  struct Interval {
    double lo, hi;
  };

  static IntervalSet all();
  static IntervalSet none();
  static IntervalSet of(double lo, double hi);
  static IntervalSet of_pieces(std::vector<Interval> iv);

  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && iv_.empty(); }
  const std::vector<Interval>& pieces() const { return iv_; }

  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet clip(double lo, double hi) const;  // always bounded
  IntervalSet translate(double dt) const;
  IntervalSet dilate_arg(double k) const;  // support of t -> f(k t)
  IntervalSet mirror_abs() const;          // support of t -> f(|t|)

 private:
  bool all_ = false;
  std::vector<Interval> iv_;  // disjoint, ascending

  void normalize();
};

struct SampledField {
  std::vector<double> grid;
  std::vector<Complex> values;
};

// Expression-tree node. Implementations are immutable after construction and
// evaluation is pure, so specs can be shared across threads.
class Expr {
 public:
  virtual ~Expr() = default;

  // `ambient` is the quadrature budget available to lazily-integrating nodes
  // (convolutions); plain nodes forward it to children.
  virtual Complex eval(double t, const QuadratureConfig& ambient) const = 0;

  virtual IntervalSet support() const { return IntervalSet::all(); }

  // Kink locations within [lo, hi] where the function is not smooth; the
  // quadrature engine aligns panel boundaries to these.
  virtual void breakpoints(double lo, double hi, std::vector<double>& out) const;

  virtual std::string describe() const = 0;
};

class FunctionSpec {
 public:
  explicit FunctionSpec(std::shared_ptr<const Expr> node);

  Complex operator()(double t) const;
  Complex eval_at(double t, const QuadratureConfig& ambient) const;
  IntervalSet support() const;
  void collect_breakpoints(double lo, double hi, std::vector<double>& out) const;
  std::string describe() const;

  std::shared_ptr<const Expr> node() const { return node_; }

 private:
  std::shared_ptr<const Expr> node_;
};

Complex eval(const FunctionSpec& f, double t);
Complex eval(const FunctionSpec& f, double t, const QuadratureConfig& ambient);

namespace fs {

FunctionSpec zero();
FunctionSpec constant(Complex c);
FunctionSpec gaussian(double sigma, double center);        // e^{-((t-center)/sigma)^2}
FunctionSpec gaussian_moment(double sigma);                // t e^{-(t/sigma)^2}
FunctionSpec triangular_delta(int n, double x, double chirp_rate);
FunctionSpec tabulated(std::vector<double> grid, std::vector<Complex> values);
FunctionSpec sum(FunctionSpec f, FunctionSpec g);
FunctionSpec product(FunctionSpec f, FunctionSpec g);
FunctionSpec scale(Complex lambda, FunctionSpec f);
FunctionSpec translate(double tau, FunctionSpec f);        // t -> f(t - tau)
FunctionSpec dilate(double k, FunctionSpec f);             // t -> f(k t), k != 0
FunctionSpec modulate_cos(double omega, FunctionSpec f);   // cos(omega t) f(t)
FunctionSpec modulate_sin(double omega, FunctionSpec f);
FunctionSpec modulate_cexp(double omega, FunctionSpec f);  // e^{i omega t} f(t)
FunctionSpec chirp(double rate, FunctionSpec f);           // e^{(i/2) rate t^2} f(t)
FunctionSpec reflect_abs(FunctionSpec f);                  // t -> f(|t|)

}  // namespace fs

// Multiplies f by the unimodular chirp e^{(i/2)(a/b) t^2}. Requires b != 0.
FunctionSpec chirp_hat(const FunctionSpec& f, const CanonicalParams& A);

// values[i] = f(grid[i]); grid strictly ascending and non-empty. The parallel
// variant evaluates grid points concurrently; results are identical.
SampledField sample(const FunctionSpec& f, const std::vector<double>& grid);
SampledField sample(const FunctionSpec& f, const std::vector<double>& grid,
                    const QuadratureConfig& ambient);
SampledField sample_serial(const FunctionSpec& f, const std::vector<double>& grid,
                           const QuadratureConfig& ambient);

}  // namespace canonx
