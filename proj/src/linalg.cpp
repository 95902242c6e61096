#include "bitradelab/linalg.hpp"

#include <utility>

#include "bitradelab/errors.hpp"

namespace btl {
namespace {

// The update sweeps are the data-parallel part: every iteration touches its
// own row (or column) and only reads the pivot row (column). Pivot selection
// and bookkeeping stay serial, so both execution policies walk the exact same
// elementary-operation sequence and produce identical output.
constexpr std::size_t kParGrain = 24;

template <typename F>
void sweep(bool par, std::size_t begin, std::size_t end, F&& body) {
  if (par && end - begin >= 2) {
#pragma omp parallel for schedule(static)
    for (long long i = static_cast<long long>(begin); i < static_cast<long long>(end); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = begin; i < end; ++i) body(i);
  }
}

void swap_rows(BigIntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(BigIntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_row(BigIntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// row[dst] -= q * row[src], columns [from, cols)
void row_axpy(BigIntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q,
              std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void col_axpy(BigIntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q,
              std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

// Smallest nonzero |entry| in d[t.., t..], ties broken by lowest (row, col).
bool select_pivot(const BigIntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& x = d.at(i, j);
      if (sgn(x) == 0) continue;
      if (!found || cmp_abs(x, d.at(pi, pj)) < 0) {
        found = true;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

std::vector<BigInt> SnfResult::diagonal() const {
  std::vector<BigInt> out;
  std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

SnfResult snf(const BigIntMatrix& m, Exec ex) {
  SnfResult r;
  r.d = m;
  r.u = BigIntMatrix::identity(m.rows());
  r.v = BigIntMatrix::identity(m.cols());
  BigIntMatrix& d = r.d;
  BigIntMatrix& u = r.u;
  BigIntMatrix& v = r.v;
  const bool par = ex == Exec::parallel &&
                   (m.rows() >= kParGrain || m.cols() >= kParGrain);

  std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!select_pivot(d, t, pi, pj)) return r;  // remaining block is zero
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
      if (sgn(d.at(t, t)) < 0) {
        negate_row(d, t);
        negate_row(u, t);
      }
      const BigInt piv = d.at(t, t);

      // clear column t; truncated quotients leave remainders |r| < piv
      bool col_clean = true;
      sweep(par, t + 1, d.rows(), [&](std::size_t i) {
        if (sgn(d.at(i, t)) == 0) return;
        BigInt q = tdiv(d.at(i, t), piv);
        if (sgn(q) != 0) {
          row_axpy(d, i, t, q, t);
          row_axpy(u, i, t, q, 0);
        }
      });
      for (std::size_t i = t + 1; i < d.rows() && col_clean; ++i)
        if (sgn(d.at(i, t)) != 0) col_clean = false;
      if (!col_clean) continue;  // a remainder is a smaller pivot candidate

      bool row_clean = true;
      sweep(par, t + 1, d.cols(), [&](std::size_t j) {
        if (sgn(d.at(t, j)) == 0) return;
        BigInt q = tdiv(d.at(t, j), piv);
        if (sgn(q) != 0) {
          col_axpy(d, j, t, q, t);
          col_axpy(v, j, t, q, 0);
        }
      });
      for (std::size_t j = t + 1; j < d.cols() && row_clean; ++j)
        if (sgn(d.at(t, j)) != 0) row_clean = false;
      if (!row_clean) continue;

      // pivot must divide the rest of the block; pull a bad row up and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!divides(piv, d.at(i, j))) {
            for (std::size_t jj = t; jj < d.cols(); ++jj) d.at(t, jj) += d.at(i, jj);
            for (std::size_t jj = 0; jj < u.cols(); ++jj) u.at(t, jj) += u.at(i, jj);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
  }
  return r;
}

BigIntMatrix hnf_row_lattice(const BigIntMatrix& m, Exec ex) {
  BigIntMatrix h = m;
  const bool par = ex == Exec::parallel &&
                   (m.rows() >= kParGrain || m.cols() >= kParGrain);
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        if (best == h.rows() || cmp_abs(h.at(i, col), h.at(best, col)) < 0) best = i;
      }
      if (best == h.rows()) break;  // column is clear below r
      swap_rows(h, r, best);
      if (sgn(h.at(r, col)) < 0) negate_row(h, r);
      const BigInt piv = h.at(r, col);
      bool clean = true;
      sweep(par, r + 1, h.rows(), [&](std::size_t i) {
        if (sgn(h.at(i, col)) == 0) return;
        BigInt q = fdiv(h.at(i, col), piv);
        if (sgn(q) != 0) row_axpy(h, i, r, q, 0);
      });
      for (std::size_t i = r + 1; i < h.rows() && clean; ++i)
        if (sgn(h.at(i, col)) != 0) clean = false;
      if (!clean) continue;
      // normalise entries above the pivot into [0, piv)
      sweep(par, 0, r, [&](std::size_t i) {
        BigInt q = fdiv(h.at(i, col), piv);
        if (sgn(q) != 0) row_axpy(h, i, r, q, 0);
      });
      ++r;
      break;
    }
  }
  // drop the zero rows that sank to the bottom
  BigIntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out.at(i, j) = h.at(i, j);
  return out;
}

bool hnf_reduces_to_zero(const BigIntMatrix& h, std::vector<BigInt> v) {
  if (v.size() != h.cols()) fail(ErrorKind::dimension_mismatch, "vector width mismatch");
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && sgn(h.at(i, p)) == 0) ++p;
    if (p == h.cols()) continue;
    BigInt q = fdiv(v[p], h.at(i, p));
    if (sgn(q) != 0)
      for (std::size_t j = p; j < h.cols(); ++j) v[j] -= q * h.at(i, j);
  }
  for (const BigInt& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

BigInt det_bareiss(const BigIntMatrix& m, Exec ex) {
  if (m.rows() != m.cols()) fail(ErrorKind::not_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigIntMatrix b = m;
  const bool par = ex == Exec::parallel && n >= kParGrain;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(b.at(k, k)) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (sgn(b.at(i, k)) != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      swap_rows(b, k, swap);
      sign = -sign;
    }
    const BigInt pkk = b.at(k, k);
    sweep(par, k + 1, n, [&](std::size_t i) {
      const BigInt bik = b.at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = b.at(i, j) * pkk - bik * b.at(k, j);
        mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      b.at(i, k) = 0;
    });
    prev = pkk;
  }
  return sign < 0 ? BigInt(-b.at(n - 1, n - 1)) : b.at(n - 1, n - 1);
}

}  // namespace btl
