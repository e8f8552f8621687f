#pragma once

#include <stdexcept>
#include <string>

namespace graver {

// Base for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public error {
 public:
  using error::error;
};

class AmbiguousRelation : public error {
 public:
  using error::error;
};

class BlockWidthUnset : public error {
 public:
  using error::error;
};

class InvalidSequence : public error {
 public:
  using error::error;
};

class PreconditionViolated : public error {
 public:
  using error::error;
};

class InvalidCertificate : public error {
 public:
  using error::error;
};

class BadM : public error {
 public:
  using error::error;
};

class TooLarge : public error {
 public:
  using error::error;
};

class ParseError : public error {
 public:
  using error::error;
};

}  // namespace graver
