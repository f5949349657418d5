#pragma once

// Classical special functions shared by the whole library: orthonormal and
// classical Laguerre polynomials, orthonormal Gegenbauer polynomials,
// digamma, log-gamma, Pochhammer symbols and binomial coefficients.
//
// All gamma-like quantities are exposed as logarithms so callers can combine
// them by exp-of-sums; the raw values overflow double precision long before
// the orbital range of interest is exhausted.

namespace hydrocomp::specfun {

enum class PolynomialKind {
  LaguerreOrthonormal,
  LaguerreClassical,
  GegenbauerOrthonormal,
};

// One member of a classical polynomial family.  `parameter` is alpha for the
// Laguerre kinds (alpha > -1) and lambda for Gegenbauer (lambda > -1/2).
struct PolynomialFamily {
  PolynomialKind kind;
  double parameter;
  int degree;
};

// Evaluates the family member at x, dispatching on kind.
double evaluate(const PolynomialFamily& family, double x);

// Classical (unnormalized) generalized Laguerre polynomial L_k^alpha(x) by
// the three-term recurrence.  L_k^alpha(0) = C(k+alpha, k).
double laguerre_classical(int degree, double alpha, double x);

// Laguerre polynomial orthonormal under the weight x^alpha e^{-x} on
// [0, inf): classical value divided by sqrt(Gamma(k+alpha+1)/k!).
double laguerre_orthonormal(int degree, double alpha, double x);

// Gegenbauer polynomial orthonormal under (1-x^2)^{lambda-1/2} on [-1, 1].
// Requires lambda > -1/2, lambda != 0 and |x| <= 1.
double gegenbauer_orthonormal(int degree, double lambda, double x);

// ln of the squared norm h_k of the classical Laguerre polynomial:
// h_k = Gamma(k+alpha+1)/k!.
double laguerre_norm_log(int degree, double alpha);

// ln of the squared norm h_k of the classical Gegenbauer polynomial:
// h_k = pi 2^{1-2 lambda} Gamma(k+2 lambda) / [k! (k+lambda) Gamma(lambda)^2].
double gegenbauer_norm_log(int degree, double lambda);

// Digamma psi(x) = Gamma'(x)/Gamma(x) for x > 0, via upward recurrence to
// x >= 6 followed by the asymptotic series.  Absolute error below 1e-12.
double digamma(double x);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// ln (x)_k with the Pochhammer symbol (x)_k = Gamma(x+k)/Gamma(x), x > 0.
double pochhammer_log(double x, int k);

// ln C(n, k) for 0 <= k <= n.
double binomial_log(int n, int k);

// x^k for integer k >= 0 by repeated multiplication (valid for negative x,
// unlike std::pow).
double ipow(double x, int k);

}  // namespace hydrocomp::specfun
