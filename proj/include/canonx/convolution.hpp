#pragma once

#include "canonx/funcspec.hpp"
#include "canonx/params.hpp"

namespace canonx {

enum class ConvKind { classic, star, theta, otimes };
enum class AbsMode { signed_arg, mirrored };

const char* conv_kind_name(ConvKind k);
const char* abs_mode_name(AbsMode m);

// All four products return lazily-integrating specs: evaluation at a point
// runs the inner quadrature under the ambient QuadratureConfig of the caller,
// so transform-of-convolution compositions share one budget end to end.
//
// star:   (1/2) e^{-(i/2)(a/b)t^2} \int fh(x) [gh(x+t) + gh(x-t)] dx
// otimes:       e^{-(i/2)(a/b)t^2} \int fh(x)  gh(x+t) dx
// theta:  (1/2) e^{-(i/2)(a/b)t^2} \int fh(x) [gh(x-t) - gh(x+t)] dx
// with fh(u) = e^{(i/2)(a/b)u^2} f(u). AbsMode::mirrored evaluates g at
// |x-t| in the shifted-difference term instead of x-t.
FunctionSpec conv_classic(FunctionSpec f, FunctionSpec g);
FunctionSpec conv_star(FunctionSpec f, FunctionSpec g, const CanonicalParams& A,
                       AbsMode mode = AbsMode::signed_arg);
FunctionSpec conv_otimes(FunctionSpec f, FunctionSpec g, const CanonicalParams& A);
FunctionSpec conv_theta(FunctionSpec f, FunctionSpec g, const CanonicalParams& A,
                        AbsMode mode = AbsMode::signed_arg);

FunctionSpec convolve(ConvKind kind, FunctionSpec f, FunctionSpec g,
                      const CanonicalParams& A, AbsMode mode = AbsMode::signed_arg);

}  // namespace canonx
