#pragma once

#include <stdexcept>
#include <string>

namespace gradstar {

/// Base of every error raised by the library. `kind()` is a stable short
/// identifier used in JSON reports and CLI exit messages.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error("ring_mismatch", what) {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error("zero_input", what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

class NotInRing : public Error {
 public:
  explicit NotInRing(const std::string& what) : Error("not_in_ring", what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("unsupported", what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t column)
      : Error("syntax_error", what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace gradstar
