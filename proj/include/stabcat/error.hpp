#pragma once

#include <stdexcept>
#include <string>

namespace stabcat {

enum class ErrorKind {
  InvalidInput,          // malformed or inconsistent user data
  DimensionMismatch,
  QuiverMismatch,
  Cyclic,
  DanglingEndpoint,
  DuplicateArrowName,
  NotAnQuiver,
  NotEpi,
  NotMono,
  NotProjective,
  NotAbelianCase,
  NoneExists,
  IsActuallyEpi,
  UnknownSuite,
  OracleMismatch,        // internal: fast path and oracle disagree
  SplitAssertionFailed,  // internal: sharp quotient came out non-projective
  InternalAssertion,
};

const char* to_string(ErrorKind kind);

/// True for kinds that signal a bug rather than bad input.
bool is_internal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace stabcat
