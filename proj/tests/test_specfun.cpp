#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hydrocomp/quadrature.hpp"
#include "hydrocomp/specfun.hpp"

using namespace hydrocomp;
using specfun::binomial_log;
using specfun::digamma;
using specfun::gegenbauer_orthonormal;
using specfun::laguerre_classical;
using specfun::laguerre_norm_log;
using specfun::laguerre_orthonormal;
using specfun::log_gamma;
using specfun::pochhammer_log;

namespace {

constexpr double kEulerGamma = 0.57721566490153286;

// Gram matrix entry <y_i, y_j> under the family weight, by Gauss quadrature.
double laguerre_gram(int i, int j, double alpha) {
  const auto& rule =
      entropy::shared_rule(entropy::QuadratureFamily::GaussLaguerre, 64, alpha);
  return rule.integrate([&](double x) {
    return laguerre_orthonormal(i, alpha, x) * laguerre_orthonormal(j, alpha, x);
  });
}

double gegenbauer_gram(int i, int j, double lambda) {
  const int m = static_cast<int>(lambda - 0.5);
  const auto& rule =
      entropy::shared_rule(entropy::QuadratureFamily::GaussLegendre, 96);
  return rule.integrate([&](double x) {
    return specfun::ipow(1.0 - x * x, m) * gegenbauer_orthonormal(i, lambda, x) *
           gegenbauer_orthonormal(j, lambda, x);
  });
}

}  // namespace

TEST_CASE("orthonormal Laguerre low-degree values") {
  // h_0 = Gamma(2) = 1, so Lhat_0^1 is the constant 1
  CHECK(laguerre_orthonormal(0, 1.0, 0.37) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(laguerre_orthonormal(0, 1.0, 5.0) == doctest::Approx(1.0).epsilon(1e-14));
  // L_1^1(x) = 2 - x with h_1 = 2
  CHECK(laguerre_orthonormal(1, 1.0, 0.0) ==
        doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(laguerre_orthonormal(1, 1.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("classical Laguerre recurrence against explicit forms") {
  for (double alpha : {0.0, 1.0, 3.0, 7.0}) {
    for (double x : {0.0, 0.3, 1.7, 4.2, 11.0}) {
      CHECK(laguerre_classical(0, alpha, x) == doctest::Approx(1.0));
      CHECK(laguerre_classical(1, alpha, x) ==
            doctest::Approx(1.0 + alpha - x).epsilon(1e-12));
      const double l2 = x * x / 2.0 - (alpha + 2.0) * x +
                        (alpha + 1.0) * (alpha + 2.0) / 2.0;
      CHECK(laguerre_classical(2, alpha, x) == doctest::Approx(l2).epsilon(1e-12));
      const double l3 = -x * x * x / 6.0 + (alpha + 3.0) * x * x / 2.0 -
                        (alpha + 2.0) * (alpha + 3.0) * x / 2.0 +
                        (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0) / 6.0;
      CHECK(laguerre_classical(3, alpha, x) == doctest::Approx(l3).epsilon(1e-12));
    }
  }
  CHECK(laguerre_classical(1, 1.0, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("classical/orthonormal Laguerre ratio is constant in x") {
  for (int k : {1, 3, 7, 15}) {
    for (double alpha : {0.5, 1.0, 5.0}) {
      const double expected = std::exp(0.5 * laguerre_norm_log(k, alpha));
      std::vector<double> ratios;
      for (double x : {0.11, 0.9, 2.3, 6.7, 13.5}) {
        const double den = laguerre_orthonormal(k, alpha, x);
        REQUIRE(den != 0.0);
        ratios.push_back(laguerre_classical(k, alpha, x) / den);
      }
      for (double r : ratios) {
        CHECK(std::abs(r - expected) / expected < 1e-10);
        CHECK(std::abs(r - ratios.front()) / std::abs(ratios.front()) < 1e-10);
      }
    }
  }
}

TEST_CASE("Gegenbauer constants and low degrees") {
  // Chat_0^{1/2} = 1/sqrt(2)
  CHECK(gegenbauer_orthonormal(0, 0.5, -0.4) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  // Chat_0^lambda = (sqrt(pi) Gamma(lambda+1/2)/Gamma(lambda+1))^{-1/2}
  for (double lambda : {0.5, 1.5, 2.5, 7.5, 19.5}) {
    const double h0 = std::sqrt(M_PI) *
                      std::exp(log_gamma(lambda + 0.5) - log_gamma(lambda + 1.0));
    CHECK(gegenbauer_orthonormal(0, lambda, 0.2) ==
          doctest::Approx(1.0 / std::sqrt(h0)).epsilon(1e-13));
  }
  // classical values via the norm: C_1 = 2 lambda x, C_2 = 2l(l+1)x^2 - l,
  // C_3 = (4/3) l(l+1)(l+2) x^3 - 2 l(l+1) x
  for (double lambda : {0.5, 1.5, 3.5}) {
    for (double x : {-0.9, -0.2, 0.4, 1.0}) {
      const double c1 = 2.0 * lambda * x;
      const double c2 = 2.0 * lambda * (lambda + 1.0) * x * x - lambda;
      const double c3 = 4.0 / 3.0 * lambda * (lambda + 1.0) * (lambda + 2.0) * x * x * x -
                        2.0 * lambda * (lambda + 1.0) * x;
      CHECK(gegenbauer_orthonormal(1, lambda, x) ==
            doctest::Approx(c1 * std::exp(-0.5 * specfun::gegenbauer_norm_log(1, lambda)))
                .epsilon(1e-12));
      CHECK(gegenbauer_orthonormal(2, lambda, x) ==
            doctest::Approx(c2 * std::exp(-0.5 * specfun::gegenbauer_norm_log(2, lambda)))
                .epsilon(1e-12));
      CHECK(gegenbauer_orthonormal(3, lambda, x) ==
            doctest::Approx(c3 * std::exp(-0.5 * specfun::gegenbauer_norm_log(3, lambda)))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("orthonormality Gram matrices are the identity") {
  // parameters used by orbitals up to n = 20: alpha = 2l+1, lambda = |m|+1/2
  for (int l : {0, 3, 9, 19}) {
    const double alpha = 2.0 * l + 1.0;
    for (int i = 0; i <= 25; ++i) {
      for (int j = i; j <= 25; ++j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(laguerre_gram(i, j, alpha) - expected) < 1e-9);
      }
    }
  }
  for (int m : {0, 1, 7, 19}) {
    const double lambda = m + 0.5;
    for (int i = 0; i <= 25; ++i) {
      for (int j = i; j <= 25; ++j) {
        const double expected = (i == j) ? 1.0 : 0.0;
        CHECK(std::abs(gegenbauer_gram(i, j, lambda) - expected) < 1e-9);
      }
    }
  }
  // the two spec'd orthogonality spot checks
  CHECK(std::abs(laguerre_gram(1, 2, 1.0)) < 1e-12);
  CHECK(std::abs(gegenbauer_gram(1, 2, 0.5)) < 1e-12);
}

TEST_CASE("digamma special values and recurrence") {
  CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-12));
  CHECK(digamma(0.5) ==
        doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(digamma(1.0) == doctest::Approx(-0.5772156649).epsilon(1e-9));
  CHECK(digamma(0.5) == doctest::Approx(-1.9635100260).epsilon(1e-9));
  for (double x : {0.25, 0.9, 1.0, 2.5, 5.9, 6.1, 17.0, 123.456}) {
    CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12);
  }
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);
  CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
}

TEST_CASE("log gamma, Pochhammer, binomial") {
  CHECK(pochhammer_log(3.0, 2) == doctest::Approx(std::log(12.0)).epsilon(1e-14));
  CHECK(binomial_log(4, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  CHECK(binomial_log(10, 0) == doctest::Approx(0.0));
  CHECK(pochhammer_log(7.5, 0) == doctest::Approx(0.0));

  // ln Gamma(117) = ln 116!, against a digit-faithful sum of logs
  long double sum = 0.0L;
  for (int k = 2; k <= 116; ++k) sum += std::log(static_cast<long double>(k));
  CHECK(std::abs(log_gamma(117.0) - static_cast<double>(sum)) /
            static_cast<double>(sum) <
        1e-13);

  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(pochhammer_log(-1.0, 2), std::domain_error);
  CHECK_THROWS_AS(binomial_log(3, 5), std::domain_error);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(laguerre_classical(2, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre_orthonormal(2, -1.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre_orthonormal(2, 1.0, -0.5), std::domain_error);
  CHECK_THROWS_AS(gegenbauer_orthonormal(2, -0.6, 0.0), std::domain_error);
  CHECK_THROWS_AS(gegenbauer_orthonormal(2, 0.5, 1.5), std::domain_error);
}

TEST_CASE("PolynomialFamily dispatch") {
  const specfun::PolynomialFamily f{specfun::PolynomialKind::LaguerreClassical,
                                    1.0, 1};
  CHECK(specfun::evaluate(f, 0.5) == doctest::Approx(1.5));
  const specfun::PolynomialFamily g{
      specfun::PolynomialKind::GegenbauerOrthonormal, 0.5, 0};
  CHECK(specfun::evaluate(g, 0.1) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}
