#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A size/cost guard was exceeded (partition count, dense dimension, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the offending column when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int column = -1)
      : Error(column >= 0 ? msg + " (column " + std::to_string(column) + ")" : msg),
        column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

}  // namespace qcorr
