#pragma once

#include <array>

#include "canonx/errors.hpp"

namespace canonx {

// Unimodular parameter quadruple A = (a, b, c, d) with ad - bc = 1.
// Immutable; construction goes through validate() so every live instance
// satisfies the determinant invariant and records whether b == 0 exactly.
class CanonicalParams {
 public:
  static constexpr double kDetTol = 1e-12;
  static constexpr double kMinB = 1e-9;

  static CanonicalParams validate(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  bool b_is_zero() const { return b_zero_; }

  // Quadratic phase rate a/b of the hat operator. Requires b != 0.
  double chirp_rate() const;

  std::array<double, 4> quad() const { return {a_, b_, c_, d_}; }

  friend bool operator==(const CanonicalParams& l, const CanonicalParams& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

 private:
  CanonicalParams(double a, double b, double c, double d, bool b_zero)
      : a_(a), b_(b), c_(c), d_(d), b_zero_(b_zero) {}

  double a_, b_, c_, d_;
  bool b_zero_;
};

CanonicalParams inverse(const CanonicalParams& A);
CanonicalParams compose(const CanonicalParams& A1, const CanonicalParams& A2);

enum class Preset { fourier, identity, fresnel };

// fourier -> (0,1,-1,0); identity -> (1,0,0,1); fresnel(z) -> (1,z,0,1).
CanonicalParams preset(Preset kind, double z = 0.0);

CanonicalParams fourier_params();
CanonicalParams identity_params();

}  // namespace canonx
