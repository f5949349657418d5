#include "hydrocomp/oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hydrocomp/quadrature.hpp"
#include "hydrocomp/specfun.hpp"

namespace hydrocomp::oracle {

namespace {

constexpr double kDensityFloor = 1e-280;

double radial_cutoff(const orbital::QuantumNumbers& q) {
  return 40.0 * q.n * q.n / q.Z;
}

struct SimpsonOutcome {
  double value;
  double error;
  int intervals;
};

// Composite Simpson with interval doubling; the trapezoid sums are reused
// across refinements and the error estimate is the Richardson difference.
SimpsonOutcome simpson_converge(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                double abs_tol, int initial = 1 << 10,
                                int max_intervals = 1 << 22) {
  int n = initial;
  const double width = b - a;
  double trapezoid = 0.5 * (f(a) + f(b));
  {
    const double h = width / n;
    double interior = 0.0;
    for (int i = 1; i < n; ++i) interior += f(a + i * h);
    trapezoid = (trapezoid + interior) * h;
  }
  double simpson_prev = 0.0;
  bool have_prev = false;
  SimpsonOutcome out{0.0, INFINITY, n};
  while (n <= max_intervals) {
    const double h = width / n;
    double mids = 0.0;
    for (int i = 0; i < n; ++i) mids += f(a + (i + 0.5) * h);
    const double trapezoid_fine = 0.5 * trapezoid + 0.5 * h * mids;
    const double simpson = (4.0 * trapezoid_fine - trapezoid) / 3.0;
    if (have_prev) {
      const double delta = std::abs(simpson - simpson_prev);
      out = SimpsonOutcome{simpson, delta / 15.0, 2 * n};
      if (delta < std::max(rel_tol * std::abs(simpson), abs_tol)) return out;
    }
    simpson_prev = simpson;
    have_prev = true;
    trapezoid = trapezoid_fine;
    n *= 2;
  }
  throw std::runtime_error("oracle quadrature did not converge");
}

// d/dx of f by central differences with one Richardson step (h, h/2).
double derivative(const std::function<double(double)>& f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace

OracleResult moment(const orbital::QuantumNumbers& q, int k) {
  if (k < -1) throw std::invalid_argument("moment requires k >= -1");
  // Route 1: after r~ = 2Zr/n, <r^k> = (n/2Z)^k (1/2n) * integral
  // x^{k+1} w_{2l+1}(x) Lhat^2 dx, exact under Gauss-Laguerre.
  const int order = 64;
  const entropy::QuadratureRule& rule = entropy::shared_rule(
      entropy::QuadratureFamily::GaussLaguerre, order, 2.0 * q.l + 1.0);
  const int nr = q.radial_nodes();
  const double alpha = 2.0 * q.l + 1.0;
  double gauss = rule.integrate([&](double x) {
    const double p = specfun::laguerre_orthonormal(nr, alpha, x);
    return std::pow(x, k + 1) * p * p;
  });
  gauss *= std::pow(q.n / (2.0 * q.Z), k) / (2.0 * q.n);

  // Route 2: direct r-space Simpson of r^k D(r).
  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;  // r^{k+2} R^2 -> 0 for k >= -1
    return std::pow(r, k) * orbital::radial_density(q, r);
  };
  const SimpsonOutcome simpson =
      simpson_converge(integrand, 0.0, radial_cutoff(q), 1e-11, 1e-13);

  const double diff = std::abs(gauss - simpson.value);
  if (diff > 1e-7 * std::abs(gauss))
    throw std::runtime_error(
        "moment oracle routes disagree: gauss-laguerre=" +
        std::to_string(gauss) + " simpson=" + std::to_string(simpson.value));
  return OracleResult{gauss, diff,
                      "gauss-laguerre(" + std::to_string(order) +
                          ") + simpson(" + std::to_string(simpson.intervals) +
                          ")"};
}

OracleResult shannon(const orbital::QuantumNumbers& q) {
  // S(R) = -integral D(r) ln R^2 dr
  auto radial = [&](double r) {
    const double R = orbital::radial_wavefunction(q, r);
    const double R2 = R * R;
    if (R2 < kDensityFloor) return 0.0;
    return -r * r * R2 * std::log(R2);
  };
  const SimpsonOutcome sr =
      simpson_converge(radial, 0.0, radial_cutoff(q), 1e-10, 1e-12);

  // S(Y) = -2 pi integral Theta(theta) ln |Y|^2 dtheta; the sin(theta)
  // factor in Theta zeroes both endpoints.
  auto angular = [&](double theta) {
    const double y2 = orbital::harmonic_square(q.l, q.m, theta);
    if (y2 < kDensityFloor) return 0.0;
    return -y2 * std::sin(theta) * std::log(y2);
  };
  const SimpsonOutcome sy =
      simpson_converge(angular, 0.0, M_PI, 1e-10, 1e-12, 1 << 8);

  return OracleResult{sr.value + 2.0 * M_PI * sy.value, sr.error + sy.error,
                      "simpson(" + std::to_string(sr.intervals) + "r x " +
                          std::to_string(sy.intervals) + "theta)"};
}

OracleResult fisher(const orbital::QuantumNumbers& q) {
  // rho(r, theta) = R^2(r) |Y|^2(theta), so the product quadrature of
  // |grad rho|^2 / rho factorizes into four 1D integrals:
  //   I = T_r * U_theta + V_r * W_theta
  // with numeric derivatives of R^2 and of |Y|^2.
  const double h_r = 2e-3 * q.n / (2.0 * q.Z);
  const double h_t = 2e-3;

  auto r2 = [&](double r) {
    const double R = orbital::radial_wavefunction(q, r);
    return R * R;
  };
  auto y2 = [&](double theta) {
    return orbital::harmonic_square(q.l, q.m, theta);
  };

  auto t_r = [&](double r) {  // (d R^2/dr)^2 r^2 / R^2
    if (r <= 0.0) return 0.0;
    const double v = r2(r);
    if (v < kDensityFloor) return 0.0;
    const double h = std::min(h_r, 0.45 * r);
    const double d = derivative(r2, r, h);
    return d * d * r * r / v;
  };
  auto v_r = [&](double r) { return r <= 0.0 && q.l > 0 ? 0.0 : r2(r); };
  auto u_t = [&](double theta) { return y2(theta) * std::sin(theta); };
  auto w_t = [&](double theta) {  // (d|Y|^2/dtheta)^2 sin(theta) / |Y|^2
    // The step shrinks towards the endpoints, where |Y|^2 ~ theta^{2|m|}:
    // a fixed step would turn the central difference into cancellation noise
    // that the 1/|Y|^2 factor then amplifies without bound.
    const double h =
        std::min({h_t, 0.45 * theta, 0.45 * (M_PI - theta)});
    if (h <= 0.0) return 0.0;
    const double v = y2(theta);
    if (v < kDensityFloor) return 0.0;
    const double d = derivative(y2, theta, h);
    return d * d * std::sin(theta) / v;
  };

  const double rmax = radial_cutoff(q);
  const SimpsonOutcome tr = simpson_converge(t_r, 0.0, rmax, 3e-9, 1e-12);
  const SimpsonOutcome vr = simpson_converge(v_r, 0.0, rmax, 3e-9, 1e-12);
  const SimpsonOutcome ut =
      simpson_converge(u_t, 0.0, M_PI, 3e-9, 1e-12, 1 << 8);
  const SimpsonOutcome wt =
      simpson_converge(w_t, 0.0, M_PI, 3e-9, 1e-12, 1 << 8);

  const double value = tr.value * (2.0 * M_PI * ut.value) +
                       vr.value * (2.0 * M_PI * wt.value);
  const double error = tr.error * 2.0 * M_PI * std::abs(ut.value) +
                       std::abs(tr.value) * 2.0 * M_PI * ut.error +
                       vr.error * 2.0 * M_PI * std::abs(wt.value) +
                       std::abs(vr.value) * 2.0 * M_PI * wt.error;
  return OracleResult{value, error,
                      "simpson-product(" + std::to_string(tr.intervals) +
                          "r x " + std::to_string(wt.intervals) +
                          "theta), richardson-gradient"};
}

OracleResult disequilibrium(const orbital::QuantumNumbers& q) {
  auto radial = [&](double r) {
    const double R = orbital::radial_wavefunction(q, r);
    return r * r * R * R * R * R;
  };
  const SimpsonOutcome rr =
      simpson_converge(radial, 0.0, radial_cutoff(q), 1e-11, 1e-15);

  auto angular = [&](double theta) {
    const double y = orbital::harmonic_square(q.l, q.m, theta);
    return y * y * std::sin(theta);
  };
  const SimpsonOutcome aa =
      simpson_converge(angular, 0.0, M_PI, 1e-11, 1e-15, 1 << 8);

  const double value = rr.value * 2.0 * M_PI * aa.value;
  const double error = rr.error * 2.0 * M_PI * std::abs(aa.value) +
                       std::abs(rr.value) * 2.0 * M_PI * aa.error;
  return OracleResult{value, error,
                      "simpson(" + std::to_string(rr.intervals) + "r x " +
                          std::to_string(aa.intervals) + "theta)"};
}

}  // namespace hydrocomp::oracle
