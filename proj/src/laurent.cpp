#include "knotcert/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "knotcert/errors.hpp"

namespace knotcert {

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) {
    offset_ = 0;
    coeffs_.push_back(std::move(constant));
  }
}

LaurentPoly::LaurentPoly(int offset, std::vector<BigInt> coefficients)
    : offset_(offset), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, int exponent) {
  if (coefficient == 0) return {};
  return LaurentPoly(exponent, {std::move(coefficient)});
}

LaurentPoly LaurentPoly::t(int exponent) { return monomial(BigInt(1), exponent); }

void LaurentPoly::trim() {
  std::size_t lo = 0;
  std::size_t hi = coeffs_.size();
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  if (hi < coeffs_.size()) coeffs_.resize(hi);
  if (lo > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
    offset_ += static_cast<int>(lo);
  }
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) return 0;
  return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  if (is_zero() || exponent < offset_ || exponent > highest_exponent()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.offset_, b.offset_);
  const int hi = std::max(a.highest_exponent(), b.highest_exponent());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(a.offset_ - lo) + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(b.offset_ - lo) + i] += b.coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.offset_ + b.offset_, std::move(c));
}

BigRat LaurentPoly::eval(const BigInt& x) const {
  if (x == 0) throw std::domain_error("cannot evaluate at t = 0: t is invertible in Z[t,t^-1]");
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (offset_ >= 0) return BigRat(acc * boost::multiprecision::pow(x, static_cast<unsigned>(offset_)));
  // divide instead of the (num, den) constructor: the latter rejects the
  // negative denominators that odd powers of negative x produce
  return BigRat(acc) / BigRat(boost::multiprecision::pow(x, static_cast<unsigned>(-offset_)));
}

LaurentPoly LaurentPoly::invert_variable() const {
  if (is_zero()) return {};
  std::vector<BigInt> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-highest_exponent(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return {};
  return LaurentPoly(offset_ + k, coeffs_);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const int exp = offset_ + static_cast<int>(i);
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigInt mag = negative ? BigInt(-c) : c;
    if (exp == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "t";
      if (exp != 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool consume(char c) {
    if (!done() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  BigInt integer() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer at position " + std::to_string(pos) +
                                       " in \"" + std::string(s) + "\"");
    return BigInt(std::string(s.substr(start, pos - start)));
  }

  int exponent() {
    bool neg = consume('-');
    if (!neg) consume('+');
    BigInt v = integer();
    if (v > 1000000) throw ParseError("exponent out of range in \"" + std::string(s) + "\"");
    int e = static_cast<int>(v);
    return neg ? -e : e;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Scanner sc{text};
  sc.skip_ws();
  if (sc.done()) throw ParseError("empty polynomial");
  LaurentPoly result;
  bool first = true;
  while (true) {
    sc.skip_ws();
    int sign = 1;
    if (sc.consume('-')) {
      sign = -1;
    } else if (sc.consume('+')) {
      if (first) throw ParseError("polynomial cannot start with '+' in \"" + std::string(text) + "\"");
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(sc.pos) + " in \"" +
                       std::string(text) + "\"");
    }
    sc.skip_ws();
    if (sc.done()) throw ParseError("dangling sign in \"" + std::string(text) + "\"");

    BigInt coeff(1);
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = sc.integer();
      has_coeff = true;
    }
    sc.skip_ws();
    bool star = sc.consume('*');
    if (star && !has_coeff)
      throw ParseError("'*' needs a coefficient before it in \"" + std::string(text) + "\"");
    if (star) sc.skip_ws();
    int exp = 0;
    if (!sc.done() && (sc.peek() == 't' || sc.peek() == 'T')) {
      ++sc.pos;
      exp = 1;
      if (sc.consume('^')) exp = sc.exponent();
    } else {
      if (star) throw ParseError("expected 't' after '*' in \"" + std::string(text) + "\"");
      if (!has_coeff)
        throw ParseError("expected a term at position " + std::to_string(sc.pos) + " in \"" +
                         std::string(text) + "\"");
    }
    result = result + monomial(sign * coeff, exp);
    first = false;
    sc.skip_ws();
    if (sc.done()) break;
    if (sc.peek() != '+' && sc.peek() != '-')
      throw ParseError("unexpected character '" + std::string(1, sc.peek()) + "' in \"" +
                       std::string(text) + "\"");
  }
  return result;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::logic_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  std::vector<BigInt> rem = a.coefficients();
  const std::vector<BigInt>& den = b.coefficients();
  if (rem.size() < den.size()) throw std::logic_error("non-exact polynomial division");
  std::vector<BigInt> quot(rem.size() - den.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[k + den.size() - 1], den.back(), q, r);
    if (r != 0) throw std::logic_error("non-exact polynomial division");
    quot[k] = q;
    if (q != 0)
      for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::logic_error("non-exact polynomial division");
  return LaurentPoly(a.lowest_exponent() - b.lowest_exponent(), std::move(quot));
}

LaurentPoly AlexanderClass::canonicalize(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<BigInt> c = p.coefficients();
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return LaurentPoly(0, std::move(c));
}

}  // namespace knotcert
