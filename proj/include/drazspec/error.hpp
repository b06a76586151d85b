#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace drazspec {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotSquare,
  NoConvergence,
  Singular,
  IllConditioned,
  InvalidDescriptor,
  NotInSpectrum,
  CheckFailed,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Scientific notation for messages; std::to_string prints small residuals as 0.000000.
inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

/// Exception carrying a machine-readable code; the C API maps it to a status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drazspec
