#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuzzyskew {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad breakpoints, alpha out of
/// range, negative weight, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is valid but the requested quantity is undefined for it, e.g. a
/// ratio coefficient on a crisp number.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NoFeasiblePoint : public Error {
 public:
  explicit NoFeasiblePoint(std::uint64_t evaluated)
      : Error("no feasible portfolio among " + std::to_string(evaluated) + " mesh points"),
        evaluated_(evaluated) {}

  std::uint64_t evaluated() const noexcept { return evaluated_; }

 private:
  std::uint64_t evaluated_;
};

/// Malformed asset document. `location()` is a JSON pointer or a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::string location, std::string detail)
      : Error(location.empty() ? detail : location + ": " + detail),
        location_(std::move(location)),
        detail_(std::move(detail)) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string location_;
  std::string detail_;
};

}  // namespace fuzzyskew
