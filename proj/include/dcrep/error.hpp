#pragma once

#include <stdexcept>
#include <string>

namespace dcrep {

// Exit-code aligned error categories used by the command line front end.
enum class ErrorKind {
  check_failure = 1,
  invalid_input = 2,
  unsupported = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed or inconsistent input (shape/field mismatch, bad table, ...).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::invalid_input, what) {}
};

/// Parameters outside the supported regime (modular case, non-split field).
class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what)
      : Error(ErrorKind::unsupported, what) {}
};

/// An internal consistency check failed.
class CheckFailure : public Error {
 public:
  explicit CheckFailure(const std::string& what)
      : Error(ErrorKind::check_failure, what) {}
};

}  // namespace dcrep
