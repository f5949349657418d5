#include "hydrocomp/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hydrocomp::specfun {

namespace {

double log_gamma_raw(double x) {
#ifdef __GLIBC__
  int sign = 0;  // lgamma_r avoids the signgam data race of lgamma
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

void require_laguerre_domain(int degree, double alpha, double x) {
  if (degree < 0) throw std::domain_error("Laguerre degree must be >= 0");
  if (!(alpha > -1.0))
    throw std::domain_error("Laguerre parameter requires alpha > -1");
  if (x < 0.0)
    throw std::domain_error("Laguerre argument requires x >= 0");
}

}  // namespace

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

double laguerre_classical(int degree, double alpha, double x) {
  require_laguerre_domain(degree, alpha, x);
  if (degree == 0) return 1.0;
  double lkm1 = 1.0;
  double lk = 1.0 + alpha - x;
  for (int k = 1; k < degree; ++k) {
    // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    const double lkp1 =
        ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

double laguerre_norm_log(int degree, double alpha) {
  return log_gamma(degree + alpha + 1.0) - log_gamma_raw(degree + 1.0);
}

double laguerre_orthonormal(int degree, double alpha, double x) {
  const double classical = laguerre_classical(degree, alpha, x);
  return classical * std::exp(-0.5 * laguerre_norm_log(degree, alpha));
}

double gegenbauer_norm_log(int degree, double lambda) {
  return std::log(M_PI) + (1.0 - 2.0 * lambda) * std::log(2.0) +
         log_gamma(degree + 2.0 * lambda) - std::log(degree + lambda) -
         log_gamma_raw(degree + 1.0) - 2.0 * log_gamma(lambda);
}

double gegenbauer_orthonormal(int degree, double lambda, double x) {
  if (degree < 0) throw std::domain_error("Gegenbauer degree must be >= 0");
  if (!(lambda > -0.5) || lambda == 0.0)
    throw std::domain_error("Gegenbauer parameter requires lambda > -1/2, lambda != 0");
  if (std::abs(x) > 1.0)
    throw std::domain_error("Gegenbauer argument requires |x| <= 1");
  double ck = 1.0;
  if (degree > 0) {
    double ckm1 = 1.0;
    ck = 2.0 * lambda * x;
    for (int k = 1; k < degree; ++k) {
      // (k+1) C_{k+1} = 2(k+lambda) x C_k - (k+2 lambda-1) C_{k-1}
      const double ckp1 =
          (2.0 * (k + lambda) * x * ck - (k + 2.0 * lambda - 1.0) * ckm1) /
          (k + 1.0);
      ckm1 = ck;
      ck = ckp1;
    }
  }
  return ck * std::exp(-0.5 * gegenbauer_norm_log(degree, lambda));
}

double evaluate(const PolynomialFamily& family, double x) {
  switch (family.kind) {
    case PolynomialKind::LaguerreOrthonormal:
      return laguerre_orthonormal(family.degree, family.parameter, x);
    case PolynomialKind::LaguerreClassical:
      return laguerre_classical(family.degree, family.parameter, x);
    case PolynomialKind::GegenbauerOrthonormal:
      return gegenbauer_orthonormal(family.degree, family.parameter, x);
  }
  throw std::logic_error("unknown polynomial kind");
}

double digamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("digamma requires x > 0 (poles at 0, -1, -2, ...)");
  double value = 0.0;
  while (x < 6.0) {
    value -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k}/(2k x^{2k}); truncated after
  // x^{-14}, which keeps the absolute error below ~2e-13 for x >= 6.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  static const double coeff[] = {
      1.0 / 12.0,   -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0,  1.0 / 12.0,
  };
  double power = inv2;
  for (double c : coeff) {
    series += c * power;
    power *= inv2;
  }
  return value + std::log(x) - 0.5 * inv - series;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma requires x > 0, got " +
                            std::to_string(x));
  }
  return log_gamma_raw(x);
}

double pochhammer_log(double x, int k) {
  if (!(x > 0.0)) throw std::domain_error("pochhammer_log requires x > 0");
  if (k < 0) throw std::domain_error("pochhammer_log requires k >= 0");
  return log_gamma_raw(x + k) - log_gamma_raw(x);
}

double binomial_log(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    throw std::domain_error("binomial_log requires 0 <= k <= n");
  return log_gamma_raw(n + 1.0) - log_gamma_raw(k + 1.0) -
         log_gamma_raw(n - k + 1.0);
}

}  // namespace hydrocomp::specfun
