#include "bitradelab/matrix.hpp"

#include "bitradelab/errors.hpp"

namespace btl {

BigIntMatrix BigIntMatrix::identity(std::size_t n) {
  BigIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigIntMatrix BigIntMatrix::transposed() const {
  BigIntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

BigIntMatrix BigIntMatrix::negated() const {
  BigIntMatrix n(rows_, cols_);
  for (std::size_t i = 0; i < rows_ * cols_; ++i) n.a_[i] = -a_[i];
  return n;
}

BigIntMatrix BigIntMatrix::shaved() const {
  if (rows_ == 0 || cols_ == 0) fail(ErrorKind::dimension_mismatch, "cannot shave an empty matrix");
  BigIntMatrix s(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0; i + 1 < rows_; ++i)
    for (std::size_t j = 0; j + 1 < cols_; ++j) s.at(i, j) = at(i, j);
  return s;
}

void BigIntMatrix::append_row(const std::vector<BigInt>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) fail(ErrorKind::dimension_mismatch, "row width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<BigInt> BigIntMatrix::row(std::size_t i) const {
  return std::vector<BigInt>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
  BigIntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

}  // namespace btl
