#include "canonx/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "canonx/quadrature.hpp"

namespace canonx {

const char* conv_kind_name(ConvKind k) {
  switch (k) {
    case ConvKind::classic: return "classic";
    case ConvKind::star: return "star";
    case ConvKind::theta: return "theta";
    case ConvKind::otimes: return "otimes";
  }
  return "?";
}

const char* abs_mode_name(AbsMode m) {
  return m == AbsMode::signed_arg ? "signed" : "mirrored";
}

namespace {

// Minkowski-style interval arithmetic on supports: every t with
// {x : x in F, x (+/-) t in G} nonempty.
IntervalSet shift_region_plus(const IntervalSet& F, const IntervalSet& G) {
  // x + t in G  =>  t in G - F
  if (F.is_all() || G.is_all()) return IntervalSet::all();
  std::vector<IntervalSet::Interval> out;
  for (const auto& f : F.pieces())
    for (const auto& g : G.pieces()) out.push_back({g.lo - f.hi, g.hi - f.lo});
  return IntervalSet::of_pieces(std::move(out));
}

IntervalSet shift_region_minus(const IntervalSet& F, const IntervalSet& G) {
  // x - t in G  =>  t in F - G
  if (F.is_all() || G.is_all()) return IntervalSet::all();
  std::vector<IntervalSet::Interval> out;
  for (const auto& f : F.pieces())
    for (const auto& g : G.pieces()) out.push_back({f.lo - g.hi, f.hi - g.lo});
  return IntervalSet::of_pieces(std::move(out));
}

IntervalSet sum_region(const IntervalSet& F, const IntervalSet& G) {
  // t = x + y, x in F, y in G
  if (F.is_all() || G.is_all()) return IntervalSet::all();
  std::vector<IntervalSet::Interval> out;
  for (const auto& f : F.pieces())
    for (const auto& g : G.pieces()) out.push_back({f.lo + g.lo, f.hi + g.hi});
  return IntervalSet::of_pieces(std::move(out));
}

struct Key {
  double trunc;
  int points;
  bool operator<(const Key& o) const {
    return trunc < o.trunc || (trunc == o.trunc && points < o.points);
  }
};

// Precomputed operand samples for the aligned fast path: trapezoid-weighted
// hat samples of f on the inner nodes, and hat samples of g on a fine grid
// over [-2T, 2T] whose step is a quarter of the inner step. Callers that
// integrate this spec with a 4x outer budget land exactly on that grid.
struct Tables {
  std::vector<double> x;
  std::vector<Complex> fw;
  double glo = 0.0;
  double gstep = 0.0;
  std::vector<Complex> gv;
};

class ConvExpr final : public Expr {
 public:
  ConvExpr(ConvKind kind, FunctionSpec f, FunctionSpec g, double rate, AbsMode mode)
      : kind_(kind), f_(std::move(f)), g_(std::move(g)), rate_(rate), mode_(mode) {}

  Complex eval(double t, const QuadratureConfig& amb) const override {
    guard(amb);
    if (kind_ == ConvKind::classic) return term_classic(t, amb);
    const Complex tp = term_shift(t, amb, /*plus=*/true);
    const Complex tm = term_shift(t, amb, /*plus=*/false);
    const double ph = -0.5 * rate_ * t * t;
    const Complex pre =
        ph == 0.0 ? Complex(1.0, 0.0) : Complex(std::cos(ph), std::sin(ph));
    switch (kind_) {
      case ConvKind::star: return pre * (0.5 * (tp + tm));
      case ConvKind::otimes: return pre * tp;
      case ConvKind::theta: return pre * (0.5 * (tm - tp));
      default: break;
    }
    return {};
  }

  IntervalSet support() const override {
    const IntervalSet F = f_.support(), G = g_.support();
    if (F.is_empty() || G.is_empty()) return IntervalSet::none();
    switch (kind_) {
      case ConvKind::classic: return sum_region(F, G);
      case ConvKind::otimes: return shift_region_plus(F, G);
      case ConvKind::star:
      case ConvKind::theta: {
        IntervalSet r = shift_region_plus(F, G).unite(shift_region_minus(F, G));
        if (mode_ == AbsMode::mirrored) r = r.unite(sum_region(F, G));
        return r;
      }
    }
    return IntervalSet::all();
  }

  void breakpoints(double lo, double hi, std::vector<double>& out) const override {
    // Kinks in t arise where operand kinks cross each other; an operand with
    // no kinks smooths them away entirely.
    std::vector<double> bf = operand_kinks(f_);
    std::vector<double> bg = operand_kinks(g_);
    if (bf.empty() || bg.empty()) return;
    auto add = [&](double v) {
      if (v >= lo && v <= hi) out.push_back(v);
    };
    for (double a : bf)
      for (double b : bg) {
        if (kind_ == ConvKind::classic) {
          add(a + b);
        } else {
          add(b - a);
          add(a - b);
          if (mode_ == AbsMode::mirrored && kind_ != ConvKind::otimes) add(a + b);
        }
      }
  }

  std::string describe() const override {
    std::ostringstream os;
    os << conv_kind_name(kind_) << "(" << f_.describe() << "," << g_.describe();
    if (kind_ != ConvKind::classic)
      os << ";rate=" << rate_ << "," << abs_mode_name(mode_);
    os << ")";
    return os.str();
  }

 private:
  void guard(const QuadratureConfig& amb) const {
    if (rate_ == 0.0) return;
    const double nu = std::abs(rate_) * amb.trunc;
    const int need = static_cast<int>(std::ceil(8.0 * amb.trunc * nu / std::numbers::pi));
    if (amb.points < need) {
      std::ostringstream os;
      os << "convolution chirp needs N >= " << need << ", got " << amb.points;
      fail(Errc::under_resolved, os.str());
    }
  }

  static std::vector<double> operand_kinks(const FunctionSpec& h) {
    std::vector<double> out;
    const IntervalSet sup = h.support();
    if (sup.is_all()) {
      h.collect_breakpoints(-1e9, 1e9, out);
      return out;  // unbounded: only explicit kinks count
    }
    for (const auto& iv : sup.pieces()) {
      out.push_back(iv.lo);
      out.push_back(iv.hi);
      h.collect_breakpoints(iv.lo, iv.hi, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Complex hat(const FunctionSpec& h, double u, const QuadratureConfig& amb) const {
    const Complex v = h.eval_at(u, amb);
    if (rate_ == 0.0) return v;
    const double ph = 0.5 * rate_ * u * u;
    return Complex(std::cos(ph), std::sin(ph)) * v;
  }

  bool plain_operands() const {
    if (!f_.support().is_all() || !g_.support().is_all()) return false;
    std::vector<double> b;
    f_.collect_breakpoints(-1e9, 1e9, b);
    g_.collect_breakpoints(-1e9, 1e9, b);
    return b.empty();
  }

  std::shared_ptr<const Tables> tables_for(const QuadratureConfig& amb) const {
    const Key key{amb.trunc, amb.points};
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto tab = std::make_shared<Tables>();
    const double T = amb.trunc;
    const int N = amb.points;
    const double h = 2.0 * T / N;
    const QuadratureConfig inner = amb.nested();
    tab->x.resize(static_cast<std::size_t>(N) + 1);
    tab->fw.resize(tab->x.size());
    for (int j = 0; j <= N; ++j) {
      const double xj = (j == N) ? T : -T + j * h;
      tab->x[static_cast<std::size_t>(j)] = xj;
      const double w = (j == 0 || j == N) ? 0.5 * h : h;
      tab->fw[static_cast<std::size_t>(j)] = w * hat(f_, xj, inner);
    }
    tab->gstep = h / 4.0;
    tab->glo = -2.0 * T;
    const std::size_t m = static_cast<std::size_t>(8) * N + 1;
    tab->gv.resize(m);
    for (std::size_t k = 0; k < m; ++k)
      tab->gv[k] = hat(g_, tab->glo + static_cast<double>(k) * tab->gstep, inner);
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, _] = cache_.emplace(key, std::move(tab));
    return it->second;
  }

  Complex lookup_g(const Tables& tab, double u, const QuadratureConfig& inner) const {
    const double idx = (u - tab.glo) / tab.gstep;
    const double k = std::round(idx);
    if (std::abs(idx - k) <= 1e-7 && k >= 0.0 &&
        k < static_cast<double>(tab.gv.size()))
      return tab.gv[static_cast<std::size_t>(k)];
    return hat(g_, u, inner);
  }

  // \int fh(x) gh(x + t) dx  (plus) or \int fh(x) gh(x - t | |x - t|) dx.
  Complex term_shift(double t, const QuadratureConfig& amb, bool plus) const {
    if (plain_operands()) {
      const auto tab = tables_for(amb);
      const QuadratureConfig inner = amb.nested();
      Complex acc{};
      if (plus) {
        for (std::size_t j = 0; j < tab->x.size(); ++j)
          acc += tab->fw[j] * lookup_g(*tab, tab->x[j] + t, inner);
      } else if (mode_ == AbsMode::signed_arg) {
        for (std::size_t j = 0; j < tab->x.size(); ++j)
          acc += tab->fw[j] * lookup_g(*tab, tab->x[j] - t, inner);
      } else {
        for (std::size_t j = 0; j < tab->x.size(); ++j)
          acc += tab->fw[j] * lookup_g(*tab, std::abs(tab->x[j] - t), inner);
      }
      return acc;
    }
    return term_shift_general(t, amb, plus);
  }

  // Bounded-support pieces carry operand kinks; the product of a smooth
  // factor with a piecewise-linear one leaves an O(h^2) trapezoid term that
  // the plain ambient step cannot push below the stacked tolerances, so these
  // clipped layouts run 16x finer. Unbounded smooth operands never take this
  // path.
  static double clipped_step(const QuadratureConfig& amb) { return amb.step() / 16.0; }

  Complex term_shift_general(double t, const QuadratureConfig& amb, bool plus) const {
    const IntervalSet F = f_.support();
    const IntervalSet G = g_.support();
    IntervalSet dom;
    if (plus) {
      dom = F.intersect(G.translate(-t));
    } else if (mode_ == AbsMode::signed_arg) {
      dom = F.intersect(G.translate(t));
    } else {
      dom = F.intersect(G.translate(t).unite(G.dilate_arg(-1.0).translate(t)));
    }
    dom = dom.clip(-amb.trunc, amb.trunc);
    if (dom.is_empty()) return {};
    std::vector<double> brk;
    f_.collect_breakpoints(-amb.trunc, amb.trunc, brk);
    {
      std::vector<double> bg;
      g_.collect_breakpoints(-amb.trunc - std::abs(t), amb.trunc + std::abs(t), bg);
      for (double b : bg) {
        if (plus) {
          brk.push_back(b - t);
        } else {
          brk.push_back(b + t);
          if (mode_ == AbsMode::mirrored) brk.push_back(t - b);
        }
      }
      if (!plus && mode_ == AbsMode::mirrored) brk.push_back(t);
    }
    const NodeLayout lay = build_layout(dom, std::move(brk), clipped_step(amb));
    const QuadratureConfig inner = amb.nested();
    return trapezoid(lay, [&](double x) {
      const double u = plus ? x + t
                     : mode_ == AbsMode::signed_arg ? x - t
                                                    : std::abs(x - t);
      return hat(f_, x, inner) * hat(g_, u, inner);
    });
  }

  Complex term_classic(double t, const QuadratureConfig& amb) const {
    if (plain_operands()) {
      const auto tab = tables_for(amb);
      const QuadratureConfig inner = amb.nested();
      Complex acc{};
      for (std::size_t j = 0; j < tab->x.size(); ++j)
        acc += tab->fw[j] * lookup_g(*tab, t - tab->x[j], inner);
      return acc;
    }
    const IntervalSet dom = f_.support()
                                .intersect(g_.support().dilate_arg(-1.0).translate(t))
                                .clip(-amb.trunc, amb.trunc);
    if (dom.is_empty()) return {};
    std::vector<double> brk;
    f_.collect_breakpoints(-amb.trunc, amb.trunc, brk);
    {
      std::vector<double> bg;
      g_.collect_breakpoints(-amb.trunc - std::abs(t), amb.trunc + std::abs(t), bg);
      for (double b : bg) brk.push_back(t - b);
    }
    const NodeLayout lay = build_layout(dom, std::move(brk), clipped_step(amb));
    const QuadratureConfig inner = amb.nested();
    return trapezoid(lay, [&](double x) {
      return f_.eval_at(x, inner) * g_.eval_at(t - x, inner);
    });
  }

  ConvKind kind_;
  FunctionSpec f_, g_;
  double rate_;
  AbsMode mode_;
  mutable std::mutex mu_;
  mutable std::map<Key, std::shared_ptr<const Tables>> cache_;
};

bool is_zero_spec(const FunctionSpec& h) { return h.support().is_empty(); }

}  // namespace

FunctionSpec conv_classic(FunctionSpec f, FunctionSpec g) {
  if (is_zero_spec(f) || is_zero_spec(g)) return fs::zero();
  return FunctionSpec(std::make_shared<ConvExpr>(ConvKind::classic, std::move(f),
                                                 std::move(g), 0.0,
                                                 AbsMode::signed_arg));
}

FunctionSpec conv_star(FunctionSpec f, FunctionSpec g, const CanonicalParams& A,
                       AbsMode mode) {
  const double rate = A.chirp_rate();
  if (is_zero_spec(f) || is_zero_spec(g)) return fs::zero();
  return FunctionSpec(
      std::make_shared<ConvExpr>(ConvKind::star, std::move(f), std::move(g), rate, mode));
}

FunctionSpec conv_otimes(FunctionSpec f, FunctionSpec g, const CanonicalParams& A) {
  const double rate = A.chirp_rate();
  if (is_zero_spec(f) || is_zero_spec(g)) return fs::zero();
  return FunctionSpec(std::make_shared<ConvExpr>(ConvKind::otimes, std::move(f),
                                                 std::move(g), rate,
                                                 AbsMode::signed_arg));
}

FunctionSpec conv_theta(FunctionSpec f, FunctionSpec g, const CanonicalParams& A,
                        AbsMode mode) {
  const double rate = A.chirp_rate();
  if (is_zero_spec(f) || is_zero_spec(g)) return fs::zero();
  return FunctionSpec(
      std::make_shared<ConvExpr>(ConvKind::theta, std::move(f), std::move(g), rate, mode));
}

FunctionSpec convolve(ConvKind kind, FunctionSpec f, FunctionSpec g,
                      const CanonicalParams& A, AbsMode mode) {
  switch (kind) {
    case ConvKind::classic: return conv_classic(std::move(f), std::move(g));
    case ConvKind::star: return conv_star(std::move(f), std::move(g), A, mode);
    case ConvKind::theta: return conv_theta(std::move(f), std::move(g), A, mode);
    case ConvKind::otimes: return conv_otimes(std::move(f), std::move(g), A);
  }
  fail(Errc::usage, "unknown convolution kind");
}

}  // namespace canonx
