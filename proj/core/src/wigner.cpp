#include "hydrocomp/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace hydrocomp::wigner {

SignedSqrtRational::SignedSqrtRational(int sign, mpq_class magnitude_squared)
    : sign_(sign), mag2_(std::move(magnitude_squared)) {
  mag2_.canonicalize();
  if (mag2_ < 0) throw std::invalid_argument("squared magnitude must be >= 0");
  if (mag2_ == 0) sign_ = 0;
  if (sign_ != -1 && sign_ != 0 && sign_ != 1)
    throw std::invalid_argument("sign must be -1, 0 or +1");
  if (sign_ == 0 && mag2_ != 0)
    throw std::invalid_argument("zero sign requires zero magnitude");
}

double SignedSqrtRational::to_double() const {
  return sign_ * std::sqrt(mpq_get_d(mag2_.get_mpq_t()));
}

SignedSqrtRational SignedSqrtRational::with_sign_flipped(bool flip) const {
  return flip ? SignedSqrtRational(-sign_, mag2_) : *this;
}

namespace {

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

bool triangle_ok(int l1, int l2, int l3) {
  return l3 >= std::abs(l1 - l2) && l3 <= l1 + l2;
}

// Racah single-sum formula, exact over rationals.
SignedSqrtRational racah_three_j(int l1, int l2, int l3, int m1, int m2,
                                 int m3) {
  if (m1 + m2 + m3 != 0 || !triangle_ok(l1, l2, l3))
    return SignedSqrtRational();

  const int tmin = std::max({0, l2 - l3 - m1, l1 - l3 + m2});
  const int tmax = std::min({l1 + l2 - l3, l1 - m1, l2 + m2});
  mpq_class sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    mpz_class den = factorial(t);
    den *= factorial(l1 + l2 - l3 - t);
    den *= factorial(l1 - m1 - t);
    den *= factorial(l2 + m2 - t);
    den *= factorial(l3 - l2 + m1 + t);
    den *= factorial(l3 - l1 - m2 + t);
    mpq_class term(mpz_class(t % 2 == 0 ? 1 : -1), den);
    term.canonicalize();
    sum += term;
  }
  if (sum == 0) return SignedSqrtRational();

  mpq_class delta2(factorial(l1 + l2 - l3) * factorial(l1 - l2 + l3) *
                       factorial(-l1 + l2 + l3),
                   factorial(l1 + l2 + l3 + 1));
  delta2.canonicalize();
  const mpz_class f = factorial(l1 + m1) * factorial(l1 - m1) *
                      factorial(l2 + m2) * factorial(l2 - m2) *
                      factorial(l3 + m3) * factorial(l3 - m3);

  mpq_class mag2 = delta2 * f * sum * sum;
  int sign = sgn(sum);
  if ((l1 - l2 - m3) % 2 != 0) sign = -sign;
  return SignedSqrtRational(sign, mag2);
}

using Key = std::array<int, 6>;  // l1, l2, l3, m1, m2, m3

// Canonical representative of the 12-element symmetry orbit (column
// permutations and simultaneous m-negation).  `flip` reports whether the
// original symbol equals the canonical one times (-1)^{l1+l2+l3}.
Key canonical_key(const Key& k, bool* flip) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                      {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  Key best{};
  bool best_odd = false;
  bool first = true;
  for (int p = 0; p < 6; ++p) {
    const bool odd_perm = p >= 3;
    for (int neg = 0; neg < 2; ++neg) {
      Key cand;
      for (int i = 0; i < 3; ++i) {
        cand[i] = k[perms[p][i]];
        cand[3 + i] = neg ? -k[3 + perms[p][i]] : k[3 + perms[p][i]];
      }
      const bool odd = odd_perm != (neg == 1);
      if (first || cand < best) {
        best = cand;
        best_odd = odd;
        first = false;
      } else if (cand == best && !odd) {
        best_odd = false;  // prefer an even route to the same representative
      }
    }
  }
  const int big_l = k[0] + k[1] + k[2];
  *flip = best_odd && (big_l % 2 != 0);
  return best;
}

std::shared_mutex cache_mutex;
std::map<Key, SignedSqrtRational> cache;

}  // namespace

SignedSqrtRational three_j(int l1, int l2, int l3, int m1, int m2, int m3) {
  if (l1 < 0 || l2 < 0 || l3 < 0)
    throw std::domain_error("3j symbol requires l >= 0");
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3)
    throw std::domain_error("3j symbol requires |m| <= l");
  if (m1 + m2 + m3 != 0 || !triangle_ok(l1, l2, l3))
    return SignedSqrtRational();

  bool flip = false;
  const Key key = canonical_key({l1, l2, l3, m1, m2, m3}, &flip);
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.with_sign_flipped(flip);
  }
  const SignedSqrtRational canonical =
      racah_three_j(key[0], key[1], key[2], key[3], key[4], key[5]);
  {
    std::unique_lock lock(cache_mutex);
    cache.emplace(key, canonical);
  }
  return canonical.with_sign_flipped(flip);
}

mpq_class three_j_squared(int l1, int l2, int l3, int m1, int m2, int m3) {
  return three_j(l1, l2, l3, m1, m2, m3).squared();
}

double triple_harmonic_integral(int l1, int l2, int l3, int m1, int m2,
                                int m3) {
  const SignedSqrtRational a = three_j(l1, l2, l3, 0, 0, 0);
  const SignedSqrtRational b = three_j(l1, l2, l3, m1, m2, m3);
  if (a.is_zero() || b.is_zero()) return 0.0;
  mpq_class prod = a.squared() * b.squared();
  prod *= mpz_class(2 * l1 + 1) * mpz_class(2 * l2 + 1) * mpz_class(2 * l3 + 1);
  const double value = std::sqrt(mpq_get_d(prod.get_mpq_t()) / (4.0 * M_PI));
  return a.sign() * b.sign() * value;
}

std::size_t cache_size() {
  std::shared_lock lock(cache_mutex);
  return cache.size();
}

void clear_cache() {
  std::unique_lock lock(cache_mutex);
  cache.clear();
}

}  // namespace hydrocomp::wigner
