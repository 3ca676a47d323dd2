#pragma once

#include <stdexcept>
#include <string>

namespace conesing {

/// Failure categories. The CLI maps each category to a stable exit code.
enum class ErrorKind {
  parse,         // malformed input documents or values
  precondition,  // input is well formed but outside an operation's domain
  internal,      // an invariant that must hold mathematically did not
};

/// Library-wide exception. `code()` names the specific condition
/// ("NotLogFano", "NonPrincipal", "BadEpsilon", ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_precondition(std::string code, const std::string& detail) {
  throw Error(ErrorKind::precondition, std::move(code), detail);
}

[[noreturn]] inline void fail_internal(std::string code, const std::string& detail) {
  throw Error(ErrorKind::internal, std::move(code), detail);
}

[[noreturn]] inline void fail_parse(const std::string& detail) {
  throw Error(ErrorKind::parse, "ParseError", detail);
}

/// Internal invariant check; never disabled.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail_internal("InvariantViolation", what);
}

}  // namespace conesing
