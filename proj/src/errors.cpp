#include "knotcert/errors.hpp"

namespace knotcert {

NonUnimodularError::NonUnimodularError(BigInt det)
    : Error("not a valid Seifert matrix: det(A + (-1)^q A^T) = " + det.str() +
            ", expected +1 or -1"),
      det_(std::move(det)) {}

OddSizeSkewError::OddSizeSkewError(std::size_t size)
    : Error("not a valid Seifert matrix: odd q requires even size, got " +
            std::to_string(size)) {}

ParityMismatchError::ParityMismatchError(int q1, int q2)
    : Error("connected sum requires equal parity parameters, got q = " +
            std::to_string(q1) + " and q = " + std::to_string(q2)) {}

NotCyclicScopeError::NotCyclicScopeError(std::size_t size1, std::size_t size2)
    : Error("module comparison is decided only for presentations of size <= 1, got " +
            std::to_string(size1) + " and " + std::to_string(size2)) {}

NoAlgebraicDataError::NoAlgebraicDataError()
    : Error("descriptor carries neither a Seifert matrix nor a module presentation") {}

}  // namespace knotcert
