#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace holoqec {

// Domain error with a stable machine-readable code ("BAD_DIMS", "PARSE_ERROR", ...)
// plus a human message. Tests and the CLI match on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace holoqec
