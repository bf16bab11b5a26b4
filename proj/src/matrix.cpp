#include "arith/matrix.hpp"

#include <sstream>
#include <utility>

#include "arith/error.hpp"

namespace arith {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
}

void IntMatrix::swap_cols(std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, c1), (*this)(r, c2));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::vector<BigInt> IntMatrix::multiply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw PreconditionError("matrix product size mismatch");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const BigInt& x = lhs(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw PreconditionError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace arith
