#pragma once

#include <stdexcept>
#include <string>

namespace edmnet {

enum class Errc {
  precondition,
  parse,
  alignment,
  ambiguity,
  insufficient_tail,
  degenerate_series,
  insufficient_support,
  undefined_metric,
  membership,
  short_series,
  lookup,
  segmentation,
  missing_artifact,
  io,
  infeasible,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported as Error; the code tells callers (and the
// C API) which class of failure occurred.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(Errc::precondition, what);
}

}  // namespace edmnet
