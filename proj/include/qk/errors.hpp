#pragma once

#include <stdexcept>
#include <string>

namespace qk {

/// Domain-level failure with a stable machine-readable code.
/// Codes in use: degenerate-stability, infinite-lifts, unsupported-system,
/// degenerate-q, pole-proximity, not-a-unit, degenerate-arrangement,
/// invalid-argument, inconsistent-result.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qk
