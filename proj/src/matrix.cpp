#include "knotcert/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

// Splits "a,b;c,d" into trimmed entry strings; enforces squareness.
std::vector<std::string> split_square(std::string_view text, std::size_t& n) {
  auto trim = [](std::string_view v) {
    std::size_t b = 0, e = v.size();
    while (b < e && std::isspace(static_cast<unsigned char>(v[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(v[e - 1]))) --e;
    return std::string(v.substr(b, e - b));
  };
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view row = text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                             : semi - start);
    std::vector<std::string> cells;
    std::size_t cstart = 0;
    while (cstart <= row.size()) {
      std::size_t comma = row.find(',', cstart);
      cells.push_back(trim(row.substr(
          cstart, comma == std::string_view::npos ? std::string_view::npos : comma - cstart)));
      if (comma == std::string_view::npos) break;
      cstart = comma + 1;
    }
    rows.push_back(std::move(cells));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  // A blank input is the 0x0 matrix.
  if (rows.size() == 1 && rows[0].size() == 1 && rows[0][0].empty()) {
    n = 0;
    return {};
  }
  n = rows.size();
  std::vector<std::string> flat;
  for (const auto& row : rows) {
    if (row.size() != n)
      throw ParseError("matrix must be square: got " + std::to_string(n) + " row(s) but a row with " +
                       std::to_string(row.size()) + " entr(ies)");
    for (const auto& cell : row) {
      if (cell.empty()) throw ParseError("empty matrix entry");
      flat.push_back(cell);
    }
  }
  return flat;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw ParseError("invalid integer \"" + text + "\"");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("invalid integer \"" + text + "\"");
  return BigInt(text);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("matrix entry count does not match size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      for (std::size_t j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::size_t n = 0;
  auto cells = split_square(text, n);
  std::vector<BigInt> entries;
  entries.reserve(cells.size());
  for (const auto& cell : cells) entries.push_back(parse_bigint(cell));
  return IntMatrix(n, std::move(entries));
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += at(i, j).str();
    }
  }
  return out;
}

LaurentMatrix::LaurentMatrix(std::size_t n, std::vector<LaurentPoly> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("matrix entry count does not match size");
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

void LaurentMatrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < n_; ++c) std::swap(entries_[i * n_ + c], entries_[j * n_ + c]);
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

LaurentMatrix LaurentMatrix::variable_inverted() const {
  LaurentMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = at(i, j).invert_variable();
  return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  LaurentMatrix r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k)
      for (std::size_t j = 0; j < a.n_; ++j)
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
  return r;
}

LaurentMatrix LaurentMatrix::parse(std::string_view text) {
  std::size_t n = 0;
  auto cells = split_square(text, n);
  std::vector<LaurentPoly> entries;
  entries.reserve(cells.size());
  for (const auto& cell : cells) entries.push_back(LaurentPoly::parse(cell));
  return LaurentMatrix(n, std::move(entries));
}

std::string LaurentMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      out += at(i, j).to_string();
    }
  }
  return out;
}

BigInt det_int(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  IntMatrix w = m;
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k) == 0) ++r;
      if (r == n) return BigInt(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev, q,
                                         rem);
        if (rem != 0) throw std::logic_error("non-exact division in integer elimination");
        w.at(i, j) = q;
      }
    prev = w.at(k, k);
  }
  return sign < 0 ? BigInt(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

namespace {

LaurentMatrix submatrix(const LaurentMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  LaurentMatrix s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(rows[i], cols[j]);
  return s;
}

LaurentMatrix first_row_minor(const LaurentMatrix& m, std::size_t col) {
  const std::size_t n = m.size();
  LaurentMatrix s(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t jj = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == col) continue;
      s.at(i - 1, jj++) = m.at(i, j);
    }
  }
  return s;
}

// Lexicographic k-subsets of {0, ..., n-1}.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LaurentPoly det_cofactor(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return m.at(0, 0);
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    LaurentPoly term = m.at(0, j) * det_cofactor(first_row_minor(m, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

LaurentPoly det_bareiss(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::one();
  LaurentMatrix w = m;
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k).is_zero()) ++r;
      if (r == n) return {};  // column of zeros below the diagonal
      w.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        // Exact in an integral domain; divide_exact throws if that breaks.
        w.at(i, j) = divide_exact(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
    prev = w.at(k, k);
  }
  return sign < 0 ? -w.at(n - 1, n - 1) : w.at(n - 1, n - 1);
}

LaurentPoly det_laurent(const LaurentMatrix& m) {
  return m.size() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

std::vector<LaurentPoly> minors(const LaurentMatrix& m, std::size_t k) {
  if (k < 1 || k > m.size())
    throw std::out_of_range("minor order " + std::to_string(k) + " out of range for size " +
                            std::to_string(m.size()));
  std::vector<LaurentPoly> out;
  for_each_combination(m.size(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_combination(m.size(), k, [&](const std::vector<std::size_t>& cols) {
      out.push_back(det_laurent(submatrix(m, rows, cols)));
    });
  });
  return out;
}

}  // namespace knotcert
