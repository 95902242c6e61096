#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace btl {

// Arbitrary-precision integer. Relation matrices stay exact no matter how
// large the torsion grows, so everything downstream of a presentation uses
// this type rather than a machine word.
using BigInt = mpz_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Truncated quotient (rounds toward zero), matching C integer division.
inline BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Floor quotient; the remainder a - b*fdiv(a,b) lies in [0, |b|).
inline BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline int cmp_abs(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline bool divides(const BigInt& d, const BigInt& a) {
  if (sgn(d) == 0) return sgn(a) == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace btl
