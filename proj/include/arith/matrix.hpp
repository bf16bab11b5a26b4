#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "arith/integer.hpp"

namespace arith {

/// Dense row-major matrix of exact integers. Sizes here stay tiny (a dozen or
/// so rows), so no attempt is made at blocking or sparsity.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t r1, std::size_t r2);
  void swap_cols(std::size_t c1, std::size_t c2);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

  std::vector<BigInt> multiply(const std::vector<BigInt>& v) const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

}  // namespace arith
