#pragma once

#include <random>

#include "knotcert/matrix.hpp"
#include "knotcert/seifert.hpp"

namespace testsupport {

using knotcert::BigInt;
using knotcert::IntMatrix;
using knotcert::LaurentMatrix;
using knotcert::LaurentPoly;
using knotcert::SeifertMatrix;

// Up to three monomials, coefficients in [-3,3], exponents in [-2,2]; can be
// zero, which the determinant code must tolerate.
inline LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), expd(-2, 2), coeffd(-3, 3);
  LaurentPoly p;
  const int terms = nterms(rng);
  for (int i = 0; i < terms; ++i)
    p = p + LaurentPoly::monomial(BigInt(coeffd(rng)), expd(rng));
  return p;
}

inline LaurentPoly random_laurent_nonzero(std::mt19937& rng) {
  LaurentPoly p;
  while (p.is_zero()) p = random_laurent(rng);
  return p;
}

inline LaurentMatrix random_laurent_matrix(std::mt19937& rng, std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_laurent(rng);
  return m;
}

/*
 * Random valid Seifert matrix of even size: noise + the standard pairing
 * block U (U[2i][2i+1] = 1). For odd q the noise is symmetric, so
 * A - A^T = U - U^T is the standard skew form (determinant 1); for even q the
 * noise is skew, so A + A^T = U + U^T is the standard hyperbolic form
 * (determinant +-1). Either way validity never needs rejection sampling.
 */
inline SeifertMatrix random_seifert(std::mt19937& rng, std::size_t size, int q) {
  IntMatrix a(size);
  std::uniform_int_distribution<int> d(-3, 3);
  const bool odd = q % 2 != 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (odd) a.at(i, i) = BigInt(d(rng));
    for (std::size_t j = i + 1; j < size; ++j) {
      const BigInt v(d(rng));
      a.at(i, j) = v;
      a.at(j, i) = odd ? v : BigInt(-v);
    }
  }
  for (std::size_t i = 0; i + 1 < size; i += 2) a.at(i, i + 1) += 1;
  return SeifertMatrix::validate(std::move(a), q);
}

// Product of elementary row operations applied to the identity: row sums with
// arbitrary Laurent factors and unit row scalings. The determinant stays a
// unit, so the presented module is trivial.
inline LaurentMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  LaurentMatrix m = LaurentMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), expd(-2, 2),
      coeffd(-2, 2), coin(0, 1);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = static_cast<std::size_t>(pick(rng));
    const std::size_t j = static_cast<std::size_t>(pick(rng));
    if (i == j) {
      const LaurentPoly u = LaurentPoly::monomial(BigInt(coin(rng) ? 1 : -1), expd(rng));
      for (std::size_t c = 0; c < n; ++c) m.at(i, c) = m.at(i, c) * u;
    } else {
      const LaurentPoly f = LaurentPoly::monomial(BigInt(coeffd(rng)), expd(rng));
      for (std::size_t c = 0; c < n; ++c) m.at(i, c) = m.at(i, c) + f * m.at(j, c);
    }
  }
  return m;
}

}  // namespace testsupport
