#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylcent {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroInverseError : Error {
  ZeroInverseError() : Error("inverse of zero in F_p") {}
};

// p is not usable for the given input (it divides a denominator).
struct BadPrimeError : Error {
  using Error::Error;
};

struct NotPrimeError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct DomainMismatchError : Error {
  using Error::Error;
};

struct ZeroElementError : Error {
  using Error::Error;
};

struct WrongCharacteristicError : Error {
  using Error::Error;
};

struct ConstantOperatorError : Error {
  using Error::Error;
};

struct NotCommutingInputError : Error {
  using Error::Error;
};

struct CentralInputError : Error {
  using Error::Error;
};

// Errors raised while parsing operator expressions. `pos` is the 0-based
// offset into the input text.
struct ParseError : Error {
  enum class Kind { Syntax, UnknownVariable, NegativeExponent, BadLiteral };

  ParseError(Kind k, std::size_t position, const std::string& msg)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        kind(k),
        pos(position) {}

  Kind kind;
  std::size_t pos;
};

}  // namespace weylcent
