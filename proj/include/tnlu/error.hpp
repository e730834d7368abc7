#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tnlu {

/// Machine-readable failure category. The CLI maps each one to an exit code.
enum class ErrorKind {
  invalid_argument,   // shape, cardinality or range violations
  parse,              // matrix / trace text that does not parse
  not_in_class,       // zero leading minor or zero pivot for a declared class
  not_tnn,            // input not totally nonnegative
  size_guard,         // brute-force enumeration refused without override
  trace_mismatch,     // replay of a trace that does not fit the matrix
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::not_in_class: return "not-in-class";
    case ErrorKind::not_tnn: return "not-tnn";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::trace_mismatch: return "trace-mismatch";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::invalid_argument, what);
}

}  // namespace detail
}  // namespace tnlu
