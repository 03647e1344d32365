#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace knotcert {

// All coefficient arithmetic is exact. Machine-word overflow is forbidden by
// contract; Bareiss intermediates can exceed 64 bits even for small matrices.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace knotcert
