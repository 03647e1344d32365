#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotcert/bigint.hpp"
#include "knotcert/laurent.hpp"

namespace knotcert {

// Square matrix over Z, row-major. The 0x0 matrix is allowed and has
// determinant 1 (empty product), so the empty Seifert matrix needs no
// special-casing downstream.
class IntMatrix {
 public:
  IntMatrix() = default;  // 0x0
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::size_t n, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  BigInt& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  IntMatrix transposed() const;
  IntMatrix operator-() const;
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  // "1,1;0,-1"; rows separated by ';', entries by ','; "" is the 0x0 matrix.
  static IntMatrix parse(std::string_view text);
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> entries_;
};

// Square matrix over Z[t, t^-1], row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  LaurentMatrix(std::size_t n, std::vector<LaurentPoly> entries);

  static LaurentMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  void swap_rows(std::size_t i, std::size_t j);

  LaurentMatrix transposed() const;
  // Entrywise substitution t -> t^-1.
  LaurentMatrix variable_inverted() const;
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  bool operator==(const LaurentMatrix&) const = default;

  // Entries use the polynomial grammar: "t-1,t;-1,-t+1".
  static LaurentMatrix parse(std::string_view text);
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Exact determinant over Z (fraction-free elimination); 0x0 -> 1.
BigInt det_int(const IntMatrix& m);

// The two determinant routes over Z[t, t^-1]. They must agree on every
// input; the property suite checks them against each other.
LaurentPoly det_cofactor(const LaurentMatrix& m);
LaurentPoly det_bareiss(const LaurentMatrix& m);

// Dispatch: cofactor expansion up to size 4, fraction-free elimination above.
LaurentPoly det_laurent(const LaurentMatrix& m);

// Determinants of all k x k submatrices, row subsets outer and column
// subsets inner, each in lexicographic order. Requires 1 <= k <= size.
std::vector<LaurentPoly> minors(const LaurentMatrix& m, std::size_t k);

}  // namespace knotcert
