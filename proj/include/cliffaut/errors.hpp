#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffaut {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch() : Error("operands belong to different signatures") {}
};

/// The element has no inverse in the algebra.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A group predicate was asked about a non-invertible element.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

class SamplerExhausted : public Error {
 public:
  using Error::Error;
};

class UnsupportedGroup : public Error {
 public:
  using Error::Error;
};

class MissingWitness : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace cliffaut
