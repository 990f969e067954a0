#include "canonx/params.hpp"

#include <cmath>
#include <sstream>

namespace canonx {

CanonicalParams CanonicalParams::validate(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    fail(Errc::usage, "canonical parameters must be finite");
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > kDetTol) {
    std::ostringstream os;
    os << "ad - bc = " << det << ", expected 1 within " << kDetTol;
    fail(Errc::not_unimodular, os.str());
  }
  bool b_zero = (b == 0.0);
  if (b_zero) b = 0.0;  // normalize -0
  if (!b_zero && std::abs(b) < kMinB) {
    std::ostringstream os;
    os << "|b| = " << std::abs(b) << " below " << kMinB << " but not exactly zero";
    fail(Errc::degenerate_b, os.str());
  }
  return CanonicalParams(a, b, c, d, b_zero);
}

double CanonicalParams::chirp_rate() const {
  if (b_zero_) fail(Errc::b_zero, "chirp rate a/b undefined for b = 0");
  return a_ / b_;
}

CanonicalParams inverse(const CanonicalParams& A) {
  return CanonicalParams::validate(A.d(), -A.b(), -A.c(), A.a());
}

CanonicalParams compose(const CanonicalParams& A1, const CanonicalParams& A2) {
  return CanonicalParams::validate(A1.a() * A2.a() + A1.b() * A2.c(),
                                   A1.a() * A2.b() + A1.b() * A2.d(),
                                   A1.c() * A2.a() + A1.d() * A2.c(),
                                   A1.c() * A2.b() + A1.d() * A2.d());
}

CanonicalParams preset(Preset kind, double z) {
  switch (kind) {
    case Preset::fourier: return CanonicalParams::validate(0.0, 1.0, -1.0, 0.0);
    case Preset::identity: return CanonicalParams::validate(1.0, 0.0, 0.0, 1.0);
    case Preset::fresnel:
      if (!std::isfinite(z)) fail(Errc::usage, "fresnel distance must be finite");
      return CanonicalParams::validate(1.0, z, 0.0, 1.0);
  }
  fail(Errc::usage, "unknown preset");
}

CanonicalParams fourier_params() { return preset(Preset::fourier); }
CanonicalParams identity_params() { return preset(Preset::identity); }

}  // namespace canonx
