#include "canonx/errors.hpp"

namespace canonx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::degenerate_b: return "DegenerateB";
    case Errc::b_zero: return "BZero";
    case Errc::under_resolved: return "UnderResolved";
    case Errc::negative_d_under_root: return "NegativeDUnderRoot";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::denominator_near_zero: return "DenominatorNearZero";
    case Errc::zero_scale: return "ZeroScale";
    case Errc::empty_grid: return "EmptyGrid";
    case Errc::usage: return "UsageError";
    case Errc::io: return "IoError";
  }
  return "Error";
}

Error::Error(Errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace canonx
