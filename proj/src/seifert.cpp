#include "knotcert/seifert.hpp"

#include <stdexcept>
#include <utility>

#include "knotcert/errors.hpp"

namespace knotcert {

SeifertMatrix SeifertMatrix::validate(IntMatrix a, int q) {
  if (q < 1) throw std::invalid_argument("parity parameter q must be a positive integer");
  const bool odd = q % 2 != 0;
  if (odd && a.size() % 2 != 0) throw OddSizeSkewError(a.size());
  const IntMatrix pairing = odd ? a - a.transposed() : a + a.transposed();
  BigInt det = det_int(pairing);
  if (det != 1 && det != -1) throw NonUnimodularError(std::move(det));
  return SeifertMatrix(std::move(a), q);
}

std::string to_string(Verdict v) {
  return v == Verdict::TrulyKnotted ? "truly-knotted" : "not-distinguished";
}

LaurentMatrix presentation_matrix(const SeifertMatrix& s) {
  const std::size_t n = s.size();
  const int sign = s.q() % 2 != 0 ? -1 : 1;
  LaurentMatrix p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.at(i, j) = LaurentPoly::monomial(s.matrix().at(i, j), 1) +
                   LaurentPoly::monomial(sign * s.matrix().at(j, i), 0);
  return p;
}

AlexanderClass alexander_class(const SeifertMatrix& s) {
  return AlexanderClass(det_laurent(presentation_matrix(s)));
}

KnottednessCertificate knottedness_certificate(const SeifertMatrix& s) {
  AlexanderClass cls = alexander_class(s);
  if (!cls.is_zero() && !cls.is_unit()) {
    return {Verdict::TrulyKnotted, cls,
            "Alexander class " + cls.to_string() +
                " is not a unit of Z[t,t^-1]: the middle homology of the infinite cyclic "
                "cover is nontrivial, so the knot is truly knotted"};
  }
  if (cls.is_unit()) {
    return {Verdict::NotDistinguished, cls,
            "Alexander class is a unit; the order-ideal obstruction vanishes and does not "
            "distinguish this knot from the unknot"};
  }
  return {Verdict::NotDistinguished, cls,
          "Alexander class is zero; the order-ideal test does not apply"};
}

SeifertMatrix reverse(const SeifertMatrix& s) {
  return SeifertMatrix::validate(s.matrix().transposed(), s.q());
}

SeifertMatrix mirror(const SeifertMatrix& s) {
  return SeifertMatrix::validate(-s.matrix().transposed(), s.q());
}

SeifertMatrix connected_sum(const SeifertMatrix& s1, const SeifertMatrix& s2) {
  if (s1.q() != s2.q()) throw ParityMismatchError(s1.q(), s2.q());
  const std::size_t n1 = s1.size(), n2 = s2.size();
  IntMatrix block(n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) block.at(i, j) = s1.matrix().at(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) block.at(n1 + i, n1 + j) = s2.matrix().at(i, j);
  return SeifertMatrix::validate(std::move(block), s1.q());
}

}  // namespace knotcert
