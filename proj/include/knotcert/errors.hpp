#pragma once

#include <stdexcept>
#include <string>

#include "knotcert/bigint.hpp"

namespace knotcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial / matrix / descriptor text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// det(A + (-1)^q A^T) is not +-1; carries the offending determinant.
class NonUnimodularError : public Error {
 public:
  explicit NonUnimodularError(BigInt det);
  const BigInt& determinant() const { return det_; }

 private:
  BigInt det_;
};

// Odd q forces A - A^T skew, which has determinant 0 in odd size.
class OddSizeSkewError : public Error {
 public:
  explicit OddSizeSkewError(std::size_t size);
};

class ParityMismatchError : public Error {
 public:
  ParityMismatchError(int q1, int q2);
};

// Module comparison is only decided for presentations of size <= 1.
class NotCyclicScopeError : public Error {
 public:
  NotCyclicScopeError(std::size_t size1, std::size_t size2);
};

// Descriptor carries neither a Seifert matrix nor a module presentation.
class NoAlgebraicDataError : public Error {
 public:
  NoAlgebraicDataError();
};

}  // namespace knotcert
