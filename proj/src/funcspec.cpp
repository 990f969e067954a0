#include "canonx/funcspec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace canonx {

QuadratureConfig QuadratureConfig::make(double trunc, int points, double tol) {
  if (!std::isfinite(trunc) || trunc <= 0.0) fail(Errc::usage, "trunc must be positive");
  if (points < 16) fail(Errc::usage, "points must be >= 16");
  if (points % 2 != 0) fail(Errc::usage, "points must be even");
  if (!std::isfinite(tol) || tol <= 0.0) fail(Errc::usage, "tol must be positive");
  return QuadratureConfig{trunc, points, tol};
}

QuadratureConfig QuadratureConfig::nested() const {
  // Quarter budget, floored so deeply nested chirped integrals stay above
  // the oscillation guard for moderate rates.
  int n = points / 4;
  if (n < 128) n = 128;
  if (n % 2 != 0) ++n;
  return QuadratureConfig{trunc, n, tol};
}

QuadratureConfig default_quadrature() { return QuadratureConfig{8.0, 1024, 1e-8}; }

// ---------------------------------------------------------------------------
// IntervalSet

IntervalSet IntervalSet::all() {
  IntervalSet s;
  s.all_ = true;
  return s;
}

IntervalSet IntervalSet::none() { return IntervalSet{}; }

IntervalSet IntervalSet::of(double lo, double hi) {
  IntervalSet s;
  if (lo <= hi) s.iv_.push_back({lo, hi});
  return s;
}

IntervalSet IntervalSet::of_pieces(std::vector<Interval> iv) {
  IntervalSet s;
  s.iv_ = std::move(iv);
  s.normalize();
  return s;
}

void IntervalSet::normalize() {
  std::erase_if(iv_, [](const Interval& i) { return !(i.lo <= i.hi); });
  std::sort(iv_.begin(), iv_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const Interval& i : iv_) {
    if (!merged.empty() && i.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, i.hi);
    } else {
      merged.push_back(i);
    }
  }
  iv_ = std::move(merged);
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  if (all_) return o;
  if (o.all_) return *this;
  IntervalSet out;
  for (const Interval& a : iv_)
    for (const Interval& b : o.iv_) {
      double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
      if (lo <= hi) out.iv_.push_back({lo, hi});
    }
  out.normalize();
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  if (all_ || o.all_) return all();
  IntervalSet out;
  out.iv_ = iv_;
  out.iv_.insert(out.iv_.end(), o.iv_.begin(), o.iv_.end());
  out.normalize();
  return out;
}

IntervalSet IntervalSet::clip(double lo, double hi) const {
  if (all_) return of(lo, hi);
  return intersect(of(lo, hi));
}

IntervalSet IntervalSet::translate(double dt) const {
  if (all_) return all();
  IntervalSet out;
  out.iv_ = iv_;
  for (Interval& i : out.iv_) {
    i.lo += dt;
    i.hi += dt;
  }
  return out;
}

IntervalSet IntervalSet::dilate_arg(double k) const {
  if (all_) return all();
  IntervalSet out;
  for (const Interval& i : iv_) {
    double lo = i.lo / k, hi = i.hi / k;
    if (lo > hi) std::swap(lo, hi);
    out.iv_.push_back({lo, hi});
  }
  out.normalize();
  return out;
}

IntervalSet IntervalSet::mirror_abs() const {
  if (all_) return all();
  IntervalSet out;
  for (const Interval& i : iv_) {
    double lo = std::max(i.lo, 0.0), hi = i.hi;
    if (lo <= hi) {
      out.iv_.push_back({lo, hi});
      out.iv_.push_back({-hi, -lo});
    }
  }
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// Expr nodes

void Expr::breakpoints(double, double, std::vector<double>&) const {}

namespace {

void add_breakpoint(double lo, double hi, double x, std::vector<double>& out) {
  if (x >= lo && x <= hi) out.push_back(x);
}

class ZeroExpr final : public Expr {
 public:
  Complex eval(double, const QuadratureConfig&) const override { return {}; }
  IntervalSet support() const override { return IntervalSet::none(); }
  std::string describe() const override { return "zero"; }
};

class ConstExpr final : public Expr {
 public:
  explicit ConstExpr(Complex c) : c_(c) {}
  Complex eval(double, const QuadratureConfig&) const override { return c_; }
  std::string describe() const override {
    std::ostringstream os;
    os << "constant(" << c_.real() << (c_.imag() < 0 ? "" : "+") << c_.imag() << "i)";
    return os.str();
  }

 private:
  Complex c_;
};

class GaussianExpr final : public Expr {
 public:
  GaussianExpr(double sigma, double center) : sigma_(sigma), center_(center) {}
  Complex eval(double t, const QuadratureConfig&) const override {
    const double z = (t - center_) / sigma_;
    return Complex(std::exp(-z * z), 0.0);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "gaussian(sigma=" << sigma_ << ",center=" << center_ << ")";
    return os.str();
  }

 private:
  double sigma_, center_;
};

class GaussianMomentExpr final : public Expr {
 public:
  explicit GaussianMomentExpr(double sigma) : sigma_(sigma) {}
  Complex eval(double t, const QuadratureConfig&) const override {
    const double z = t / sigma_;
    return Complex(t * std::exp(-z * z), 0.0);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "gaussian_moment(sigma=" << sigma_ << ")";
    return os.str();
  }

 private:
  double sigma_;
};

class TriangularDeltaExpr final : public Expr {
 public:
  TriangularDeltaExpr(int n, double x, double rate) : n_(n), x_(x), rate_(rate) {}

  Complex eval(double t, const QuadratureConfig&) const override {
    const double n = static_cast<double>(n_);
    double mag;
    if (t >= 0.0 && t <= 1.0 / n) {
      mag = n * n * t;
    } else if (t > 1.0 / n && t <= 2.0 / n) {
      mag = n * n * (2.0 / n - t);
    } else {
      return {};
    }
    const double phase = -rate_ * x_ * t;
    if (phase == 0.0) return Complex(mag, 0.0);
    return std::polar(mag, phase);
  }

  IntervalSet support() const override { return IntervalSet::of(0.0, 2.0 / n_); }

  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    add_breakpoint(lo, hi, 0.0, out);
    add_breakpoint(lo, hi, 1.0 / n_, out);
    add_breakpoint(lo, hi, 2.0 / n_, out);
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "triangular_delta(n=" << n_ << ",x=" << x_ << ",rate=" << rate_ << ")";
    return os.str();
  }

 private:
  int n_;
  double x_, rate_;
};

class TabulatedExpr final : public Expr {
 public:
  TabulatedExpr(std::vector<double> grid, std::vector<Complex> values)
      : grid_(std::move(grid)), values_(std::move(values)) {}

  Complex eval(double t, const QuadratureConfig&) const override {
    if (t < grid_.front() || t > grid_.back()) return {};
    auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    if (it == grid_.begin()) return values_.front();
    if (it == grid_.end()) return values_.back();
    const std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - grid_[lo]) / (grid_[hi] - grid_[lo]);
    return values_[lo] + w * (values_[hi] - values_[lo]);
  }

  IntervalSet support() const override { return IntervalSet::of(grid_.front(), grid_.back()); }

  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    auto first = std::lower_bound(grid_.begin(), grid_.end(), lo);
    for (auto it = first; it != grid_.end() && *it <= hi; ++it) out.push_back(*it);
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "tabulated(" << grid_.size() << " points on [" << grid_.front() << ","
       << grid_.back() << "])";
    return os.str();
  }

 private:
  std::vector<double> grid_;
  std::vector<Complex> values_;
};

class SumExpr final : public Expr {
 public:
  SumExpr(FunctionSpec f, FunctionSpec g) : f_(std::move(f)), g_(std::move(g)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return f_.eval_at(t, amb) + g_.eval_at(t, amb);
  }
  IntervalSet support() const override { return f_.support().unite(g_.support()); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    f_.collect_breakpoints(lo, hi, out);
    g_.collect_breakpoints(lo, hi, out);
  }
  std::string describe() const override {
    return "sum(" + f_.describe() + "," + g_.describe() + ")";
  }

 private:
  FunctionSpec f_, g_;
};

class ProductExpr final : public Expr {
 public:
  ProductExpr(FunctionSpec f, FunctionSpec g) : f_(std::move(f)), g_(std::move(g)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return f_.eval_at(t, amb) * g_.eval_at(t, amb);
  }
  IntervalSet support() const override { return f_.support().intersect(g_.support()); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    f_.collect_breakpoints(lo, hi, out);
    g_.collect_breakpoints(lo, hi, out);
  }
  std::string describe() const override {
    return "product(" + f_.describe() + "," + g_.describe() + ")";
  }

 private:
  FunctionSpec f_, g_;
};

class ScaleExpr final : public Expr {
 public:
  ScaleExpr(Complex lambda, FunctionSpec f) : lambda_(lambda), f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return lambda_ * f_.eval_at(t, amb);
  }
  IntervalSet support() const override { return f_.support(); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    f_.collect_breakpoints(lo, hi, out);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "scale(" << lambda_.real() << (lambda_.imag() < 0 ? "" : "+") << lambda_.imag()
       << "i," << f_.describe() << ")";
    return os.str();
  }

 private:
  Complex lambda_;
  FunctionSpec f_;
};

class TranslateExpr final : public Expr {
 public:
  TranslateExpr(double tau, FunctionSpec f) : tau_(tau), f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return f_.eval_at(t - tau_, amb);
  }
  IntervalSet support() const override { return f_.support().translate(tau_); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    std::vector<double> inner;
    f_.collect_breakpoints(lo - tau_, hi - tau_, inner);
    for (double b : inner) out.push_back(b + tau_);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "translate(" << tau_ << "," << f_.describe() << ")";
    return os.str();
  }

 private:
  double tau_;
  FunctionSpec f_;
};

class DilateExpr final : public Expr {
 public:
  DilateExpr(double k, FunctionSpec f) : k_(k), f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return f_.eval_at(k_ * t, amb);
  }
  IntervalSet support() const override { return f_.support().dilate_arg(k_); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    double a = k_ * lo, b = k_ * hi;
    if (a > b) std::swap(a, b);
    std::vector<double> inner;
    f_.collect_breakpoints(a, b, inner);
    for (double x : inner) out.push_back(x / k_);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "dilate(" << k_ << "," << f_.describe() << ")";
    return os.str();
  }

 private:
  double k_;
  FunctionSpec f_;
};

enum class Mod { cos, sin, cexp };

class ModulateExpr final : public Expr {
 public:
  ModulateExpr(Mod kind, double omega, FunctionSpec f)
      : kind_(kind), omega_(omega), f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    const Complex v = f_.eval_at(t, amb);
    switch (kind_) {
      case Mod::cos: return std::cos(omega_ * t) * v;
      case Mod::sin: return std::sin(omega_ * t) * v;
      case Mod::cexp: return Complex(std::cos(omega_ * t), std::sin(omega_ * t)) * v;
    }
    return v;
  }
  IntervalSet support() const override { return f_.support(); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    f_.collect_breakpoints(lo, hi, out);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << (kind_ == Mod::cos ? "modulate_cos" : kind_ == Mod::sin ? "modulate_sin"
                                                                  : "modulate_cexp")
       << "(" << omega_ << "," << f_.describe() << ")";
    return os.str();
  }

 private:
  Mod kind_;
  double omega_;
  FunctionSpec f_;
};

class ChirpExpr final : public Expr {
 public:
  ChirpExpr(double rate, FunctionSpec f) : rate_(rate), f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    const double ph = 0.5 * rate_ * t * t;
    return Complex(std::cos(ph), std::sin(ph)) * f_.eval_at(t, amb);
  }
  IntervalSet support() const override { return f_.support(); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    f_.collect_breakpoints(lo, hi, out);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "chirp(" << rate_ << "," << f_.describe() << ")";
    return os.str();
  }

 private:
  double rate_;
  FunctionSpec f_;
};

class ReflectAbsExpr final : public Expr {
 public:
  explicit ReflectAbsExpr(FunctionSpec f) : f_(std::move(f)) {}
  Complex eval(double t, const QuadratureConfig& amb) const override {
    return f_.eval_at(std::abs(t), amb);
  }
  IntervalSet support() const override { return f_.support().mirror_abs(); }
  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    add_breakpoint(lo, hi, 0.0, out);
    std::vector<double> inner;
    f_.collect_breakpoints(0.0, std::max(std::abs(lo), std::abs(hi)), inner);
    for (double b : inner) {
      add_breakpoint(lo, hi, b, out);
      add_breakpoint(lo, hi, -b, out);
    }
  }
  std::string describe() const override { return "reflect_abs(" + f_.describe() + ")"; }

 private:
  FunctionSpec f_;
};

}  // namespace

// ---------------------------------------------------------------------------
// FunctionSpec

FunctionSpec::FunctionSpec(std::shared_ptr<const Expr> node) : node_(std::move(node)) {
  if (!node_) fail(Errc::usage, "null function node");
}

Complex FunctionSpec::operator()(double t) const { return node_->eval(t, default_quadrature()); }

Complex FunctionSpec::eval_at(double t, const QuadratureConfig& ambient) const {
  return node_->eval(t, ambient);
}

IntervalSet FunctionSpec::support() const { return node_->support(); }

void FunctionSpec::collect_breakpoints(double lo, double hi, std::vector<double>& out) const {
  node_->breakpoints(lo, hi, out);
}

std::string FunctionSpec::describe() const { return node_->describe(); }

Complex eval(const FunctionSpec& f, double t) { return f(t); }

Complex eval(const FunctionSpec& f, double t, const QuadratureConfig& ambient) {
  return f.eval_at(t, ambient);
}

namespace fs {

FunctionSpec zero() { return FunctionSpec(std::make_shared<ZeroExpr>()); }

FunctionSpec constant(Complex c) { return FunctionSpec(std::make_shared<ConstExpr>(c)); }

FunctionSpec gaussian(double sigma, double center) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(center))
    fail(Errc::usage, "gaussian requires finite center and sigma > 0");
  return FunctionSpec(std::make_shared<GaussianExpr>(sigma, center));
}

FunctionSpec gaussian_moment(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    fail(Errc::usage, "gaussian_moment requires sigma > 0");
  return FunctionSpec(std::make_shared<GaussianMomentExpr>(sigma));
}

FunctionSpec triangular_delta(int n, double x, double chirp_rate) {
  if (n < 1) fail(Errc::usage, "triangular_delta requires n >= 1");
  if (!std::isfinite(x) || !std::isfinite(chirp_rate))
    fail(Errc::usage, "triangular_delta requires finite x and chirp rate");
  return FunctionSpec(std::make_shared<TriangularDeltaExpr>(n, x, chirp_rate));
}

FunctionSpec tabulated(std::vector<double> grid, std::vector<Complex> values) {
  if (grid.size() < 2) fail(Errc::empty_grid, "tabulated grid needs >= 2 points");
  if (grid.size() != values.size())
    fail(Errc::usage, "tabulated grid/value length mismatch");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i].real()) ||
        !std::isfinite(values[i].imag()))
      fail(Errc::usage, "tabulated entries must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      fail(Errc::usage, "tabulated grid must be strictly ascending");
  }
  return FunctionSpec(std::make_shared<TabulatedExpr>(std::move(grid), std::move(values)));
}

FunctionSpec sum(FunctionSpec f, FunctionSpec g) {
  return FunctionSpec(std::make_shared<SumExpr>(std::move(f), std::move(g)));
}

FunctionSpec product(FunctionSpec f, FunctionSpec g) {
  return FunctionSpec(std::make_shared<ProductExpr>(std::move(f), std::move(g)));
}

FunctionSpec scale(Complex lambda, FunctionSpec f) {
  return FunctionSpec(std::make_shared<ScaleExpr>(lambda, std::move(f)));
}

FunctionSpec translate(double tau, FunctionSpec f) {
  if (!std::isfinite(tau)) fail(Errc::usage, "translate shift must be finite");
  return FunctionSpec(std::make_shared<TranslateExpr>(tau, std::move(f)));
}

FunctionSpec dilate(double k, FunctionSpec f) {
  if (k == 0.0) fail(Errc::zero_scale, "dilate factor must be nonzero");
  if (!std::isfinite(k)) fail(Errc::usage, "dilate factor must be finite");
  return FunctionSpec(std::make_shared<DilateExpr>(k, std::move(f)));
}

FunctionSpec modulate_cos(double omega, FunctionSpec f) {
  return FunctionSpec(std::make_shared<ModulateExpr>(Mod::cos, omega, std::move(f)));
}

FunctionSpec modulate_sin(double omega, FunctionSpec f) {
  return FunctionSpec(std::make_shared<ModulateExpr>(Mod::sin, omega, std::move(f)));
}

FunctionSpec modulate_cexp(double omega, FunctionSpec f) {
  return FunctionSpec(std::make_shared<ModulateExpr>(Mod::cexp, omega, std::move(f)));
}

FunctionSpec chirp(double rate, FunctionSpec f) {
  if (!std::isfinite(rate)) fail(Errc::usage, "chirp rate must be finite");
  if (rate == 0.0) return f;
  return FunctionSpec(std::make_shared<ChirpExpr>(rate, std::move(f)));
}

FunctionSpec reflect_abs(FunctionSpec f) {
  return FunctionSpec(std::make_shared<ReflectAbsExpr>(std::move(f)));
}

}  // namespace fs

FunctionSpec chirp_hat(const FunctionSpec& f, const CanonicalParams& A) {
  return fs::chirp(A.chirp_rate(), f);
}

static SampledField sample_impl(const FunctionSpec& f, const std::vector<double>& grid,
                                const QuadratureConfig& ambient, bool parallel) {
  if (grid.empty()) fail(Errc::empty_grid, "sample grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) fail(Errc::usage, "sample grid must be strictly ascending");
  SampledField out;
  out.grid = grid;
  out.values.resize(grid.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(grid.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out.values[i] = f.eval_at(grid[i], ambient);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out.values[i] = f.eval_at(grid[i], ambient);
  }
  return out;
}

SampledField sample(const FunctionSpec& f, const std::vector<double>& grid) {
  return sample_impl(f, grid, default_quadrature(), true);
}

SampledField sample(const FunctionSpec& f, const std::vector<double>& grid,
                    const QuadratureConfig& ambient) {
  return sample_impl(f, grid, ambient, true);
}

SampledField sample_serial(const FunctionSpec& f, const std::vector<double>& grid,
                           const QuadratureConfig& ambient) {
  return sample_impl(f, grid, ambient, false);
}

}  // namespace canonx
