#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace renflow {

// Error taxonomy shared by the library, the CLI and the tests.  Every
// error carries a stable machine-readable code; the CLI maps Config
// errors to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define RENFLOW_DEFINE_ERROR(Name, Code)                         \
  struct Name : Error {                                          \
    explicit Name(const std::string& w) : Error(Code, w) {}      \
  }

RENFLOW_DEFINE_ERROR(EmptyWindowError, "EmptyWindow");
RENFLOW_DEFINE_ERROR(WindowTooNarrowError, "WindowTooNarrow");
RENFLOW_DEFINE_ERROR(NotHolomorphicError, "NotHolomorphic");
RENFLOW_DEFINE_ERROR(NotLocalError, "NotLocal");
RENFLOW_DEFINE_ERROR(UnitComponentError, "UnitComponent");
RENFLOW_DEFINE_ERROR(NotHomogeneousError, "NotHomogeneous");
RENFLOW_DEFINE_ERROR(ShiftOutOfWindowError, "ShiftOutOfWindow");
RENFLOW_DEFINE_ERROR(ResourceCapError, "ResourceCap");
RENFLOW_DEFINE_ERROR(CutoffMismatchError, "CutoffMismatch");
RENFLOW_DEFINE_ERROR(ConfigError, "Config");

#undef RENFLOW_DEFINE_ERROR

}  // namespace renflow
