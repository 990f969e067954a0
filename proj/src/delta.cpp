#include "canonx/delta.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "canonx/quadrature.hpp"

namespace canonx {

FunctionSpec triangular_delta(const DeltaSeqSpec& spec, int n) {
  if (n < 1) fail(Errc::usage, "delta index n must be >= 1");
  return fs::triangular_delta(n, spec.x, spec.params.chirp_rate());
}

FunctionSpec delta_term(const DeltaSeqSpec& spec, int n) {
  switch (spec.family) {
    case DeltaFamilyKind::triangular: return triangular_delta(spec, n);
  }
  fail(Errc::usage, "unknown delta family");
}

std::vector<int> dyadic_schedule(int n_max) {
  std::vector<int> ns;
  for (int n = 1; n <= n_max; n *= 2) ns.push_back(n);
  if (ns.empty() || ns.back() != n_max) ns.push_back(n_max);
  return ns;
}

namespace {

bool non_increasing(const std::vector<double>& v, double slack = 1e-12) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1] + slack) return false;
  return true;
}

DeltaAxiomReport run_axioms(const std::vector<int>& ns,
                            const std::function<FunctionSpec(int)>& term,
                            double modulation_omega, double unit_tol,
                            const QuadratureConfig& cfg) {
  DeltaAxiomReport rep;
  rep.checked_n = ns;
  rep.unit_tol = unit_tol;
  rep.epsilons = {0.5, 0.1, 0.02};
  rep.tail_mass.assign(rep.epsilons.size(), {});
  for (int n : ns) {
    const FunctionSpec dn = term(n);
    const FunctionSpec weighted = fs::modulate_cexp(modulation_omega, dn);
    rep.unit_integral_residuals.push_back(std::abs(integrate(weighted, cfg) - 1.0));
    rep.norm_bound = std::max(rep.norm_bound, l1_norm(dn, cfg));
    for (std::size_t e = 0; e < rep.epsilons.size(); ++e)
      rep.tail_mass[e].push_back(l1_norm_outside(dn, rep.epsilons[e], cfg));
  }
  bool ok = std::isfinite(rep.norm_bound);
  for (double r : rep.unit_integral_residuals) ok = ok && r <= unit_tol;
  for (const auto& tails : rep.tail_mass) ok = ok && non_increasing(tails);
  rep.pass = ok;
  return rep;
}

}  // namespace

DeltaAxiomReport check_axioms(const DeltaSeqSpec& spec, int n_max,
                              const QuadratureConfig& cfg) {
  if (n_max < 4) fail(Errc::usage, "check_axioms needs n_max >= 4");
  const std::vector<int> ns = dyadic_schedule(n_max);
  for (int n : ns) {
    if (cfg.step() > 1.0 / (8.0 * n)) {
      std::ostringstream os;
      os << "grid step " << cfg.step() << " cannot resolve the [0, 2/" << n
         << "] spike; need step <= " << 1.0 / (8.0 * n);
      fail(Errc::under_resolved, os.str());
    }
  }
  const double omega = spec.params.chirp_rate() * spec.x;
  return run_axioms(
      ns, [&](int n) { return delta_term(spec, n); }, omega, 1e-8, cfg);
}

DeltaAxiomReport star_closure_check(const DeltaSeqSpec& s1, const DeltaSeqSpec& s2,
                                    ConvKind kind, int n_max,
                                    const QuadratureConfig& cfg) {
  if (kind != ConvKind::star && kind != ConvKind::theta)
    fail(Errc::kind_mismatch, "closure check covers star and theta only");
  if (!(s1.params == s2.params))
    fail(Errc::usage, "closure check needs a shared parameter matrix");
  if (n_max < 4) fail(Errc::usage, "closure check needs n_max >= 4");
  const std::vector<int> ns = dyadic_schedule(n_max);
  for (int n : ns) {
    if (cfg.step() > 1.0 / (8.0 * n)) {
      std::ostringstream os;
      os << "grid step " << cfg.step() << " cannot resolve index " << n;
      fail(Errc::under_resolved, os.str());
    }
  }
  const double omega = s1.params.chirp_rate() * s1.x;
  return run_axioms(
      ns,
      [&](int n) {
        return convolve(kind, delta_term(s1, n), delta_term(s2, n), s1.params);
      },
      omega, 1e-4, cfg);
}

}  // namespace canonx
