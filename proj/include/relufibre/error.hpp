#pragma once

#include <stdexcept>
#include <string>

namespace relufibre {

enum class ErrorCode {
  DimensionMismatch,
  MalformedRational,
  InvalidArchitecture,
  IndexOutOfRange,
  Schema,
  Precondition,
  WidthCapExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this one exception type; the
/// code distinguishes input problems from refusals.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace relufibre
