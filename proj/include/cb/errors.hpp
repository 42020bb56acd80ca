#ifndef CB_ERRORS_HPP
#define CB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cb {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// left_subtract(b, a) with b > a.
struct Underflow : Error {
  Underflow() : Error("ordinal left subtraction underflow") {}
};

struct NotSuccessor : Error {
  NotSuccessor() : Error("ordinal is not a successor") {}
};

struct NotLimit : Error {
  NotLimit() : Error("ordinal is not a nonzero limit") {}
};

struct EmptyTerm : Error {
  EmptyTerm() : Error("operation requires a nonempty term") {}
};

struct EmptyInput : Error {
  EmptyInput() : Error("operation requires nonempty input") {}
};

struct NotMember : Error {
  NotMember() : Error("point is not a member of the term") {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& what = "value out of range") : Error(what) {}
};

struct NotEquivalent : Error {
  NotEquivalent() : Error("terms are not homeomorphic") {}
};

// A term that violates a structural invariant (overlapping hulls, bad scheme, ...).
struct InvalidTerm : Error {
  explicit InvalidTerm(const std::string& what) : Error(what) {}
};

// Raised by the ordinal notation parser; `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace cb

#endif
