#pragma once

#include <string>

#include "knotcert/laurent.hpp"
#include "knotcert/matrix.hpp"

namespace knotcert {

/*
 * Seifert matrix of a (2q-1)-knot, Levine convention: A presents the middle
 * homology of the infinite cyclic cover via t*A + (-1)^q * A^T, and A is
 * valid when det(A + (-1)^q A^T) = +-1. For odd q the difference A - A^T is
 * skew, which forces even size (0x0 allowed; it is the unknot).
 *
 * Construction goes through validate(), so every live value is valid.
 */
class SeifertMatrix {
 public:
  // Throws NonUnimodularError / OddSizeSkewError / std::invalid_argument (q < 1).
  static SeifertMatrix validate(IntMatrix a, int q);

  const IntMatrix& matrix() const { return a_; }
  int q() const { return q_; }
  std::size_t size() const { return a_.size(); }
  // Dimension of the knot the matrix belongs to before any spinning.
  int knot_dimension() const { return 2 * q_ - 1; }

  bool operator==(const SeifertMatrix&) const = default;

 private:
  SeifertMatrix(IntMatrix a, int q) : a_(std::move(a)), q_(q) {}

  IntMatrix a_;
  int q_;
};

enum class Verdict { TrulyKnotted, NotDistinguished };

std::string to_string(Verdict v);

// Outcome of the order-ideal test. The invariant is one-directional: a
// non-unit nonzero Alexander class certifies knottedness, a unit class
// certifies nothing.
struct KnottednessCertificate {
  Verdict verdict;
  AlexanderClass evidence;
  std::string narrative;

  bool operator==(const KnottednessCertificate&) const = default;
};

// The presentation matrix t*A + (-1)^q * A^T of H_q of the infinite cyclic
// cover.
LaurentMatrix presentation_matrix(const SeifertMatrix& s);

// Canonicalized determinant of the presentation matrix.
AlexanderClass alexander_class(const SeifertMatrix& s);

KnottednessCertificate knottedness_certificate(const SeifertMatrix& s);

// Orientation variants: reverse (-K) transposes A, mirror (K*) negates the
// transpose; composing both negates A. All preserve validity, and all four
// variants share one Alexander class.
SeifertMatrix reverse(const SeifertMatrix& s);
SeifertMatrix mirror(const SeifertMatrix& s);

// Block-diagonal sum; requires equal q. Alexander classes multiply.
SeifertMatrix connected_sum(const SeifertMatrix& s1, const SeifertMatrix& s2);

}  // namespace knotcert
