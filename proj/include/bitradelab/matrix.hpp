#pragma once

#include <cstddef>
#include <vector>

#include "bitradelab/bigint.hpp"

namespace btl {

// Dense integer matrix, row-major.
class BigIntMatrix {
public:
  BigIntMatrix() = default;
  BigIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static BigIntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  BigIntMatrix transposed() const;
  BigIntMatrix negated() const;
  // Removes the last row and the last column.
  BigIntMatrix shaved() const;

  void append_row(const std::vector<BigInt>& row);
  std::vector<BigInt> row(std::size_t i) const;

  bool operator==(const BigIntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b);

}  // namespace btl
