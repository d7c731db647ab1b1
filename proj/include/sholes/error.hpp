#pragma once

#include <stdexcept>
#include <string>

namespace sholes {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  NonFiniteWeight,
  NotBinaryUndirected,
  DimensionMismatch,
  ZeroDenominator,
  ParseError,
  UnsupportedFormat,
  IoError,
  InvalidSpec,
  InvalidArgument,
  Internal,
};

/// Single exception type for the library. `code()` drives the CLI exit
/// status; `code_name()` is the stable greppable token used in diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const char* code_name() const noexcept { return code_name(code_); }

  static const char* code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::SelfLoop: return "self-loop";
      case ErrorCode::DuplicateEdge: return "duplicate-edge";
      case ErrorCode::NonFiniteWeight: return "non-finite-weight";
      case ErrorCode::NotBinaryUndirected: return "not-binary-undirected";
      case ErrorCode::DimensionMismatch: return "dimension-mismatch";
      case ErrorCode::ZeroDenominator: return "zero-denominator";
      case ErrorCode::ParseError: return "parse-error";
      case ErrorCode::UnsupportedFormat: return "unsupported-format";
      case ErrorCode::IoError: return "io-error";
      case ErrorCode::InvalidSpec: return "invalid-spec";
      case ErrorCode::InvalidArgument: return "invalid-argument";
      case ErrorCode::Internal: return "internal";
    }
    return "unknown";
  }

 private:
  ErrorCode code_;
};

/// Measure-domain failures (a measure rejecting an otherwise valid graph)
/// versus input/usage failures. The CLI maps the former to exit 3, the
/// latter to exit 2.
inline bool is_domain_error(ErrorCode code) noexcept {
  return code == ErrorCode::NotBinaryUndirected ||
         code == ErrorCode::ZeroDenominator;
}

}  // namespace sholes
