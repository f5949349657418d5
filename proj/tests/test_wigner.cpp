#include <doctest.h>

#include <cmath>
#include <complex>

#include "cg_reference.hpp"
#include "hydrocomp/quadrature.hpp"
#include "hydrocomp/specfun.hpp"
#include "hydrocomp/wigner.hpp"

using namespace hydrocomp;
using wigner::SignedSqrtRational;
using wigner::three_j;
using wigner::three_j_squared;

namespace {

bool triangle_ok(int a, int b, int c) {
  return c >= std::abs(a - b) && c <= a + b;
}

// Condon-Shortley spherical harmonic at phi = 0 (theta part, real).  The
// orthonormal-Gegenbauer form carries no CS phase, so (-1)^m is applied for
// m > 0.
double cs_harmonic_theta(int l, int m, double x /* = cos(theta) */) {
  const int mu = std::abs(m);
  const double s2 = 1.0 - x * x;
  const double value = specfun::gegenbauer_orthonormal(l - mu, mu + 0.5, x) *
                       std::pow(s2, 0.5 * mu) / std::sqrt(2.0 * M_PI);
  return (m > 0 && m % 2 != 0) ? -value : value;
}

// Gaunt integral of three CS harmonics by quadrature: the phi integral is
// 2 pi when m1+m2+m3 = 0 and zero otherwise; the theta part is polynomial in
// cos(theta) and exact under Gauss-Legendre.
double gaunt_by_quadrature(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  const auto& rule =
      entropy::shared_rule(entropy::QuadratureFamily::GaussLegendre, 64);
  const double theta_part = rule.integrate([&](double x) {
    return cs_harmonic_theta(l1, m1, x) * cs_harmonic_theta(l2, m2, x) *
           cs_harmonic_theta(l3, m3, x);
  });
  return 2.0 * M_PI * theta_part;
}

}  // namespace

TEST_CASE("3j closed-form examples") {
  for (int l = 0; l <= 6; ++l) {
    const SignedSqrtRational v = three_j(l, l, 0, 0, 0, 0);
    CHECK(v.sign() == (l % 2 == 0 ? 1 : -1));
    CHECK(v.squared() == mpq_class(1, 2 * l + 1));
  }
  const SignedSqrtRational v = three_j(1, 1, 2, 0, 0, 0);
  CHECK(v.sign() == 1);
  CHECK(v.squared() == mpq_class(2, 15));
}

TEST_CASE("3j selection rules and domain errors") {
  CHECK(three_j(1, 1, 1, 1, 0, 0).is_zero());   // m sum != 0
  CHECK(three_j(1, 1, 3, 0, 0, 0).is_zero());   // triangle violated
  CHECK(three_j(1, 1, 1, 0, 0, 0).is_zero());   // odd l sum, all m zero
  CHECK_THROWS_AS(three_j(1, 1, 2, 2, 0, -2), std::domain_error);
  CHECK_THROWS_AS(three_j(-1, 1, 2, 0, 0, 0), std::domain_error);
}

TEST_CASE("3j agrees exactly with ladder-operator Clebsch-Gordan") {
  for (int l1 = 0; l1 <= 6; ++l1) {
    for (int l2 = 0; l2 <= 6; ++l2) {
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(6, l1 + l2); ++l3) {
        const auto table = cgref::three_j_table(l1, l2, l3);
        for (int m1 = -l1; m1 <= l1; ++m1) {
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const SignedSqrtRational got = three_j(l1, l2, l3, m1, m2, m3);
            const auto it = table.find({m1, m2});
            REQUIRE(it != table.end());
            CHECK(got.sign() == it->second.sign);
            CHECK(got.squared() == it->second.mag2);
          }
        }
      }
    }
  }
}

TEST_CASE("3j orthogonality sum rule holds exactly") {
  const std::pair<int, int> pairs[] = {{1, 1}, {3, 5}, {10, 10},
                                       {17, 20}, {20, 20}};
  for (const auto& [l1, l2] : pairs) {
    for (int m1 : {0, 1, l1}) {
      for (int m2 : {0, -1, -l2}) {
        const int m3 = -m1 - m2;
        mpq_class sum = 0;
        for (int l3 = std::abs(l1 - l2); l3 <= l1 + l2; ++l3) {
          if (std::abs(m3) > l3) continue;
          sum += mpq_class(2 * l3 + 1) * three_j_squared(l1, l2, l3, m1, m2, m3);
        }
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("3j permutation symmetries are exact") {
  const int symbols[][6] = {
      {2, 3, 4, 1, -2, 1},   {5, 5, 6, 3, 2, -5},  {1, 1, 2, 1, 1, -2},
      {4, 2, 3, 0, 1, -1},   {19, 19, 20, 17, -3, -14},
  };
  for (const auto& s : symbols) {
    const SignedSqrtRational base = three_j(s[0], s[1], s[2], s[3], s[4], s[5]);
    // even column permutations leave the value unchanged
    CHECK(three_j(s[1], s[2], s[0], s[4], s[5], s[3]) == base);
    CHECK(three_j(s[2], s[0], s[1], s[5], s[3], s[4]) == base);
    // odd permutations and m negation give (-1)^{l1+l2+l3}
    const bool odd = (s[0] + s[1] + s[2]) % 2 != 0;
    const SignedSqrtRational swapped =
        three_j(s[1], s[0], s[2], s[4], s[3], s[5]);
    CHECK(swapped == base.with_sign_flipped(odd));
    const SignedSqrtRational negated =
        three_j(s[0], s[1], s[2], -s[3], -s[4], -s[5]);
    CHECK(negated == base.with_sign_flipped(odd));
  }
}

TEST_CASE("SignedSqrtRational invariants") {
  const SignedSqrtRational zero;
  CHECK(zero.is_zero());
  CHECK(zero.sign() == 0);
  CHECK(zero.numerator() == 0);
  CHECK(zero.to_double() == 0.0);

  const SignedSqrtRational v(-1, mpq_class(4, 6));  // reduces to 2/3
  CHECK(v.numerator() == 2);
  CHECK(v.denominator() == 3);
  CHECK(v.to_double() == doctest::Approx(-std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(SignedSqrtRational(0, mpq_class(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(SignedSqrtRational(2, mpq_class(1, 2)), std::invalid_argument);
}

TEST_CASE("triple harmonic integral") {
  CHECK(wigner::triple_harmonic_integral(0, 0, 0, 0, 0, 0) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-14));
  CHECK(wigner::triple_harmonic_integral(2, 2, 3, 1, 1, -1) == 0.0);

  for (int l1 = 0; l1 <= 4; ++l1) {
    for (int l2 = 0; l2 <= 4; ++l2) {
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(4, l1 + l2); ++l3) {
        for (int m1 = -l1; m1 <= l1; ++m1) {
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const double expected = gaunt_by_quadrature(l1, l2, l3, m1, m2, m3);
            const double got =
                wigner::triple_harmonic_integral(l1, l2, l3, m1, m2, m3);
            CHECK(std::abs(got - expected) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("memo cache is transparent") {
  wigner::clear_cache();
  const SignedSqrtRational a = three_j(6, 6, 8, 2, 2, -4);
  const std::size_t after_first = wigner::cache_size();
  const SignedSqrtRational b = three_j(6, 6, 8, 2, 2, -4);
  CHECK(a == b);
  CHECK(wigner::cache_size() == after_first);
  // canonicalization maps symmetry partners to the same entry
  const SignedSqrtRational c = three_j(6, 8, 6, 2, -4, 2);
  CHECK(c == a);
  CHECK(wigner::cache_size() == after_first);
}
