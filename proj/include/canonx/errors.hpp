#pragma once

#include <stdexcept>
#include <string>

namespace canonx {

enum class Errc {
  not_unimodular,
  degenerate_b,
  b_zero,
  under_resolved,
  negative_d_under_root,
  kind_mismatch,
  denominator_near_zero,
  zero_scale,
  empty_grid,
  usage,
  io,
};

const char* errc_name(Errc c);

// Domain error carrying a stable code; what() is prefixed with the code name.
class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc c, const std::string& msg);

}  // namespace canonx
