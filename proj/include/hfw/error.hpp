#pragma once

#include <stdexcept>
#include <string>

namespace hfw {

enum class ErrorKind {
  invalid_argument,
  size_limit,
  construction_invariant_violated,
  unsupported_order,
  not_a_plane_witness,
  witness_unavailable,
  parse_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::construction_invariant_violated: return "construction-invariant-violated";
    case ErrorKind::unsupported_order: return "unsupported-order";
    case ErrorKind::not_a_plane_witness: return "not-a-plane-witness";
    case ErrorKind::witness_unavailable: return "witness-unavailable";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace hfw
