#pragma once

#include <stdexcept>
#include <string>

namespace symalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ZeroLeadError : public Error {
 public:
  using Error::Error;
};

class ZeroPolyError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

// Progress or fuel failure inside symf; signals an implementation bug,
// since termination is guaranteed for symmetric input.
class InternalProgressError : public Error {
 public:
  using Error::Error;
};

class IntegralityError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line(line),
        column(column) {}

  int line;
  int column;
};

}  // namespace symalg
