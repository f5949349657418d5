#pragma once

#include <gmpxx.h>

#include <cstddef>

// Exact Wigner 3j symbols over arbitrary-precision rationals, plus the
// Gaunt-type integral of three spherical harmonics.  Exactness matters here:
// the angular sums need l up to 19, hence l' up to 38 and factorials near
// Gamma(78) inside the Racah sum, far beyond double precision.

namespace hydrocomp::wigner {

// A value of the form sign * sqrt(numerator/denominator) with the fraction
// kept in lowest terms.  sign == 0 if and only if numerator == 0.
class SignedSqrtRational {
 public:
  SignedSqrtRational() : sign_(0), mag2_(0) {}
  SignedSqrtRational(int sign, mpq_class magnitude_squared);

  int sign() const { return sign_; }
  const mpz_class& numerator() const { return mag2_.get_num(); }
  const mpz_class& denominator() const { return mag2_.get_den(); }
  bool is_zero() const { return sign_ == 0; }

  // The exact square, sign dropped.
  const mpq_class& squared() const { return mag2_; }

  // sign * sqrt(numerator/denominator), rounded once at the end.
  double to_double() const;

  // Returns the value with the sign multiplied by `factor` (+1 or -1).
  SignedSqrtRational with_sign_flipped(bool flip) const;

  friend bool operator==(const SignedSqrtRational& a,
                         const SignedSqrtRational& b) {
    return a.sign_ == b.sign_ && a.mag2_ == b.mag2_;
  }

 private:
  int sign_;
  mpq_class mag2_;
};

// Exact 3j symbol (l1 l2 l3; m1 m2 m3) by the Racah single-sum formula.
// Integer angular momenta only.  Returns an exact zero when a selection rule
// fails (m1+m2+m3 != 0 or triangle violation); throws std::domain_error for
// l < 0 or |m| > l.  Results are memoized behind a thread-safe cache keyed by
// the symmetry-canonicalized argument tuple.
SignedSqrtRational three_j(int l1, int l2, int l3, int m1, int m2, int m3);

// The exact square of the 3j symbol as a rational.
mpq_class three_j_squared(int l1, int l2, int l3, int m1, int m2, int m3);

// Integral of a product of three spherical harmonics over the sphere:
//   sqrt((2l1+1)(2l2+1)(2l3+1)/(4 pi)) * (l1 l2 l3; 0 0 0) * (l1 l2 l3; m1 m2 m3)
// The exact 3j squares are combined first; the square root and the single
// conversion to floating point happen last.
double triple_harmonic_integral(int l1, int l2, int l3, int m1, int m2,
                                int m3);

// Memo-cache introspection (the cache never affects results, only speed).
std::size_t cache_size();
void clear_cache();

}  // namespace hydrocomp::wigner
