#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotcert/bigint.hpp"

namespace knotcert {

/*
 * Elements of the Laurent polynomial ring Z[t, t^-1].
 *
 * A value is a dense coefficient vector plus the exponent of its lowest
 * term. Invariant: nonzero values are trimmed (first and last coefficient
 * nonzero); the zero polynomial has an empty vector and offset 0. Equality
 * on the trimmed form is semantic equality. Values are immutable after
 * construction and every operation is a pure function.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero
  explicit LaurentPoly(BigInt constant);
  LaurentPoly(int offset, std::vector<BigInt> coefficients);  // trims

  static LaurentPoly monomial(BigInt coefficient, int exponent);
  static LaurentPoly t(int exponent = 1);  // the unit t^exponent
  static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  // true iff +-t^k: exactly one nonzero coefficient, of absolute value 1
  bool is_unit() const;

  int lowest_exponent() const { return offset_; }
  int highest_exponent() const;  // 0 for the zero polynomial
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int exponent) const;  // 0 outside the stored span

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  // Exact value at x != 0, as a reduced rational; rejects x = 0 since t is
  // invertible in the ring.
  BigRat eval(const BigInt& x) const;

  // Substitutes t -> t^-1.
  LaurentPoly invert_variable() const;

  // Multiplication by t^k.
  LaurentPoly shifted(int k) const;

  // "t^2 - 3*t + 1", highest exponent first; negative exponents as t^-1.
  std::string to_string() const;
  // Accepts the printed grammar; '*' between coefficient and t is optional.
  static LaurentPoly parse(std::string_view text);

 private:
  void trim();

  int offset_ = 0;
  std::vector<BigInt> coeffs_;
};

// Exact quotient a / b in Z[t, t^-1]; throws std::logic_error when the
// division is not exact. Used by fraction-free elimination, where exactness
// is an invariant of the algorithm.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/*
 * A Laurent polynomial up to multiplication by units +-t^k, stored as the
 * unique representative with offset 0 and positive leading (highest-degree)
 * coefficient. Two polynomials differ by a unit iff their canonical forms
 * are identical; units canonicalize to 1, zero stays zero.
 */
class AlexanderClass {
 public:
  AlexanderClass() = default;  // class of zero
  explicit AlexanderClass(const LaurentPoly& p) : rep_(canonicalize(p)) {}

  static LaurentPoly canonicalize(const LaurentPoly& p);

  const LaurentPoly& canonical() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_unit() const { return rep_.is_unit(); }

  bool operator==(const AlexanderClass&) const = default;
  std::string to_string() const { return rep_.to_string(); }

 private:
  LaurentPoly rep_;
};

}  // namespace knotcert
