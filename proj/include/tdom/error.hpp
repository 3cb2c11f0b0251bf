#pragma once

#include <stdexcept>
#include <string>

namespace tdom {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  RejectedEdge,
  InvalidFamily,
  ParseError,
  DomainTooLarge,
  ResourceExhausted,
  Undefined,
  NotATree,
  OutOfDomain,
  IoError,
  SolverMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdom
