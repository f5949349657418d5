#include "hydrocomp/measures.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hydrocomp/specfun.hpp"
#include "hydrocomp/wigner.hpp"

namespace hydrocomp::measures {

namespace {

double poly_3n2_ll1(int n, int l) {
  return 3.0 * double(n) * n - double(l) * (l + 1.0);
}

double log_sum_exp(const std::vector<double>& logs) {
  const double m = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double v : logs) sum += std::exp(v - m);
  return m + std::log(sum);
}

// Fingerprint of the quadrature settings for the zeta denominator cache.
std::tuple<int, double, double, int> settings_fingerprint(
    const entropy::QuadratureSettings& s) {
  const int last = s.order_ladder.empty() ? 0 : s.order_ladder.back();
  return {last, s.rel_tol, s.abs_tol, static_cast<int>(s.order_ladder.size())};
}

}  // namespace

double variance(const QuantumNumbers& q) {
  const double n = q.n, l = q.l;
  return (n * n * (n * n + 2.0) - l * l * (l + 1.0) * (l + 1.0)) /
         (4.0 * q.Z * q.Z);
}

double fisher(const QuantumNumbers& q) {
  return 4.0 * q.Z * q.Z / (double(q.n) * q.n * q.n) * (q.n - std::abs(q.m));
}

double mean_radius(const QuantumNumbers& q) {
  return poly_3n2_ll1(q.n, q.l) / (2.0 * q.Z);
}

double radial_disequilibrium(const QuantumNumbers& q) {
  const int n = q.n, l = q.l;
  const int nr = q.radial_nodes();
  const double log_prefactor = 3.0 * std::log(q.Z) +
                               (2.0 - 4.0 * n) * std::log(2.0) -
                               5.0 * std::log(double(n));
  std::vector<double> logs;
  logs.reserve(nr + 1);
  for (int k = 0; k <= nr; ++k) {
    // C(2nr-2k, nr-k)^2 * (k+1)_k / k! * Gamma(4l+2k+3) / Gamma(2l+k+2)^2
    const double lt = 2.0 * specfun::binomial_log(2 * (nr - k), nr - k) +
                      specfun::pochhammer_log(k + 1.0, k) -
                      specfun::log_gamma(k + 1.0) +
                      specfun::log_gamma(4.0 * l + 2.0 * k + 3.0) -
                      2.0 * specfun::log_gamma(2.0 * l + k + 2.0);
    logs.push_back(log_prefactor + lt);
  }
  return std::exp(log_sum_exp(logs));
}

double angular_disequilibrium(int l, int m) {
  if (l < 0 || std::abs(m) > l)
    throw std::invalid_argument("angular disequilibrium requires |m| <= l");
  const int mu = std::abs(m);
  const double hat_l2 = 2.0 * l + 1.0;
  double sum = 0.0;
  for (int lp = 2 * mu; lp <= 2 * l; ++lp) {
    const mpq_class sq0 = wigner::three_j_squared(l, l, lp, 0, 0, 0);
    if (sq0 == 0) continue;
    const mpq_class sqm = wigner::three_j_squared(l, l, lp, m, m, -2 * m);
    mpq_class term = sq0 * sqm * mpz_class(2 * lp + 1);
    sum += mpq_get_d(term.get_mpq_t());
  }
  return hat_l2 * hat_l2 / (4.0 * M_PI) * sum;
}

double disequilibrium(const QuantumNumbers& q) {
  return radial_disequilibrium(q) * angular_disequilibrium(q.l, q.m);
}

double disequilibrium_factor(int n, int l, int m) {
  return disequilibrium(QuantumNumbers(n, l, m, 1.0));
}

double cramer_rao(const QuantumNumbers& q) {
  const double n = q.n, l = q.l;
  return (q.n - std::abs(q.m)) / (n * n * n) *
         (n * n * (n * n + 2.0) - l * l * (l + 1.0) * (l + 1.0));
}

double fisher_shannon(const QuantumNumbers& q,
                      const entropy::QuadratureSettings& settings) {
  const double b = entropy::shannon_entropy(q, settings).b;
  const double n = q.n;
  return 4.0 * (q.n - std::abs(q.m)) / (n * n * n) / (2.0 * M_PI * M_E) *
         std::exp(2.0 / 3.0 * b);
}

double shape_complexity(const QuantumNumbers& q,
                        const entropy::QuadratureSettings& settings) {
  const double b = entropy::shannon_entropy(q, settings).b;
  return disequilibrium_factor(q.n, q.l, q.m) * std::exp(b);
}

BoundsReport bounds(const QuantumNumbers& q,
                    const entropy::QuadratureSettings& settings) {
  const double n = q.n;
  const double p = poly_3n2_ll1(q.n, q.l);
  BoundsReport out{};
  out.bound_fs = 2.0 * M_E / (9.0 * std::cbrt(M_PI)) *
                 (q.n - std::abs(q.m)) / (n * n * n) * p * p;
  out.bound_sc =
      M_PI * std::exp(3.0) / 27.0 * p * p * p *
      disequilibrium_factor(q.n, q.l, q.m);
  const double cfs = fisher_shannon(q, settings);
  const double csc = shape_complexity(q, settings);
  out.xi_fs = (out.bound_fs - cfs) / cfs;
  out.xi_sc = (out.bound_sc - csc) / csc;
  return out;
}

double measure_value(MeasureKind kind, const QuantumNumbers& q,
                     const entropy::QuadratureSettings& settings) {
  switch (kind) {
    case MeasureKind::Variance: return variance(q);
    case MeasureKind::Fisher: return fisher(q);
    case MeasureKind::Shannon:
      return entropy::shannon_entropy(q, settings).s_total;
    case MeasureKind::Disequilibrium: return disequilibrium(q);
    case MeasureKind::CramerRao: return cramer_rao(q);
    case MeasureKind::FisherShannon: return fisher_shannon(q, settings);
    case MeasureKind::ShapeComplexity: return shape_complexity(q, settings);
  }
  throw std::logic_error("unknown measure kind");
}

double zeta(MeasureKind kind, const QuantumNumbers& q,
            const entropy::QuadratureSettings& settings) {
  using DenKey = std::tuple<int, double, std::tuple<int, double, double, int>>;
  static std::mutex mutex;
  static std::map<DenKey, double> denominators;

  const DenKey key{static_cast<int>(kind), q.Z, settings_fingerprint(settings)};
  bool found = false;
  double den = 0.0;
  {
    std::lock_guard lock(mutex);
    auto it = denominators.find(key);
    if (it != denominators.end()) {
      den = it->second;
      found = true;
    }
  }
  if (!found) {
    den = measure_value(kind, QuantumNumbers(1, 0, 0, q.Z), settings);
    std::lock_guard lock(mutex);
    denominators.emplace(key, den);
  }
  return measure_value(kind, q, settings) / den;
}

MeasureReport report(const QuantumNumbers& q,
                     const entropy::QuadratureSettings& settings) {
  const entropy::EntropyBreakdown ent = entropy::shannon_entropy(q, settings);
  MeasureReport rep{q,  0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, ent};
  rep.variance = variance(q);
  rep.fisher = fisher(q);
  rep.shannon = ent.s_total;
  rep.entropic_power = std::exp(ent.s_total);
  rep.disequilibrium = disequilibrium(q);
  rep.cramer_rao = cramer_rao(q);
  const double n = q.n;
  rep.fisher_shannon = 4.0 * (q.n - std::abs(q.m)) / (n * n * n) /
                       (2.0 * M_PI * M_E) * std::exp(2.0 / 3.0 * ent.b);
  rep.shape_complexity =
      disequilibrium_factor(q.n, q.l, q.m) * std::exp(ent.b);
  const double p = poly_3n2_ll1(q.n, q.l);
  rep.bound_fs = 2.0 * M_E / (9.0 * std::cbrt(M_PI)) *
                 (q.n - std::abs(q.m)) / (n * n * n) * p * p;
  rep.bound_sc = M_PI * std::exp(3.0) / 27.0 * p * p * p *
                 disequilibrium_factor(q.n, q.l, q.m);
  rep.xi_fs = (rep.bound_fs - rep.fisher_shannon) / rep.fisher_shannon;
  rep.xi_sc = (rep.bound_sc - rep.shape_complexity) / rep.shape_complexity;
  return rep;
}

QuadraticFit quadratic_least_squares(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("fit requires equally many x and y values");
  const int count = static_cast<int>(x.size());
  if (count < 4) throw std::invalid_argument("fit requires at least 4 points");

  Eigen::MatrixXd design(count, 3);
  Eigen::VectorXd values(count);
  for (int i = 0; i < count; ++i) {
    design(i, 0) = x[i] * x[i];
    design(i, 1) = x[i];
    design(i, 2) = 1.0;
    values(i) = y[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 3)
    throw std::runtime_error("fit design matrix is rank-deficient");
  const Eigen::Vector3d coeff = qr.solve(values);
  const Eigen::VectorXd fitted = design * coeff;

  const double fbar = fitted.mean();
  const double ybar = values.mean();
  double sfy = 0.0, sff = 0.0, syy = 0.0;
  for (int i = 0; i < count; ++i) {
    const double df = fitted(i) - fbar;
    const double dy = values(i) - ybar;
    sfy += df * dy;
    sff += df * df;
    syy += dy * dy;
  }
  QuadraticFit fit{coeff(0), coeff(1), coeff(2), 0.0};
  fit.r = (sff > 0.0 && syy > 0.0) ? sfy / std::sqrt(sff * syy) : 1.0;
  return fit;
}

QuadraticFit fit_fisher_shannon_quadratic(
    int l, int m, int n_from, int n_to,
    const entropy::QuadratureSettings& settings) {
  if (n_from < l + 1)
    throw std::invalid_argument("fit range requires n_from >= l+1");
  if (n_to - n_from + 1 < 4)
    throw std::invalid_argument("fit requires at least 4 points");

  const double ground = fisher_shannon(QuantumNumbers(1, 0, 0), settings);
  std::vector<double> ns, zetas;
  for (int n = n_from; n <= n_to; ++n) {
    ns.push_back(n);
    zetas.push_back(fisher_shannon(QuantumNumbers(n, l, m), settings) /
                    ground);
  }
  return quadratic_least_squares(ns, zetas);
}

}  // namespace hydrocomp::measures
