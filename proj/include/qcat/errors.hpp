#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero denominator or otherwise unusable input value.
class MalformedValue : public Error {
 public:
  using Error::Error;
};

class IncompatibleRoot : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class IllGraded : public Error {
 public:
  using Error::Error;
};

// Everything that means "ask again with more terms": truncation, window,
// continued-fraction depth, t-incomplete evaluation.
class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class TIncomplete : public InsufficientTruncation {
 public:
  using InsufficientTruncation::InsufficientTruncation;
};

class InsufficientWindow : public InsufficientTruncation {
 public:
  using InsufficientTruncation::InsufficientTruncation;
};

class InsufficientDepth : public InsufficientTruncation {
 public:
  using InsufficientTruncation::InsufficientTruncation;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qcat
