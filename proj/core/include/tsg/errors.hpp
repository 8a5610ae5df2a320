#pragma once

#include <stdexcept>
#include <string>

namespace tsg {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidPermutationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class NotASubgroupError : public Error {
 public:
  using Error::Error;
};

class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

class SearchBudgetError : public Error {
 public:
  using Error::Error;
};

class UnknownPairError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsg
