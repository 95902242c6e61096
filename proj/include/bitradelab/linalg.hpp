#pragma once

#include <vector>

#include "bitradelab/matrix.hpp"

namespace btl {

// Every elimination kernel comes in two flavours: a plain serial loop nest and
// an OpenMP one that parallelises the row/column update sweeps. The serial
// path is the reference; tests assert both produce identical output (the
// pivot sequence is shared, only the sweeps are distributed).
enum class Exec { serial, parallel };

struct SnfResult {
  BigIntMatrix d;  // diagonal, rows x cols, d1 | d2 | ..., entries >= 0
  BigIntMatrix u;  // rows x rows, |det| = 1
  BigIntMatrix v;  // cols x cols, |det| = 1, u*m*v = d

  std::vector<BigInt> diagonal() const;
};

SnfResult snf(const BigIntMatrix& m, Exec ex = Exec::parallel);

// Canonical row-style Hermite Normal Form of the lattice spanned by the rows:
// positive pivots, entries above a pivot reduced into [0, pivot), zero rows
// dropped. Two row sets span the same lattice iff their forms are equal.
BigIntMatrix hnf_row_lattice(const BigIntMatrix& m, Exec ex = Exec::parallel);

// True iff v lies in the row lattice with basis h (h must be an HNF basis).
bool hnf_reduces_to_zero(const BigIntMatrix& h, std::vector<BigInt> v);

// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
// has determinant 1.
BigInt det_bareiss(const BigIntMatrix& m, Exec ex = Exec::parallel);

}  // namespace btl
