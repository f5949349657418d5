#include "hydrocomp/orbital.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hydrocomp/specfun.hpp"

namespace hydrocomp::orbital {

QuantumNumbers::QuantumNumbers(int n_, int l_, int m_, double Z_)
    : n(n_), l(l_), m(m_), Z(Z_) {
  if (n < 1) throw std::invalid_argument("n out of range: requires n >= 1");
  if (l < 0 || l > n - 1)
    throw std::invalid_argument("l out of range: requires 0 <= l <= n-1");
  if (m < -l || m > l)
    throw std::invalid_argument("m out of range |m| <= l");
  if (!(Z > 0.0) || !std::isfinite(Z))
    throw std::invalid_argument("Z out of range: requires Z > 0");
}

double energy(const QuantumNumbers& q) {
  return -q.Z * q.Z / (2.0 * q.n * q.n);
}

double radial_wavefunction(const QuantumNumbers& q, double r) {
  if (r < 0.0) throw std::invalid_argument("radial coordinate requires r >= 0");
  const double rt = 2.0 * q.Z * r / q.n;  // r~ = 2 Z r / n
  const double prefactor = 2.0 * std::pow(q.Z, 1.5) / (q.n * q.n);
  // [w_{2l+1}(r~)/r~]^{1/2} = r~^l e^{-r~/2}, combined in log space so the
  // tail stays representable where r~^l and e^{-r~/2} separately are not.
  double envelope;
  if (rt == 0.0) {
    envelope = (q.l == 0) ? 1.0 : 0.0;
  } else {
    envelope = std::exp(q.l * std::log(rt) - 0.5 * rt);
  }
  if (envelope == 0.0) return 0.0;
  return prefactor * envelope *
         specfun::laguerre_orthonormal(q.radial_nodes(), 2 * q.l + 1, rt);
}

double radial_density(const QuantumNumbers& q, double r) {
  const double R = radial_wavefunction(q, r);
  return r * r * R * R;
}

double harmonic_square(int l, int m, double theta) {
  const int mu = std::abs(m);
  if (l < 0 || mu > l)
    throw std::invalid_argument("harmonic requires 0 <= |m| <= l");
  const double x = std::cos(theta);
  const double c = specfun::gegenbauer_orthonormal(l - mu, mu + 0.5, x);
  const double s2m = specfun::ipow(std::sin(theta), 2 * mu);
  return c * c * s2m / (2.0 * M_PI);
}

double angular_density(int l, int m, double theta) {
  return harmonic_square(l, m, theta) * std::sin(theta);
}

double total_density(const QuantumNumbers& q, double r, double theta,
                     double /*phi*/) {
  const double R = radial_wavefunction(q, r);
  return R * R * harmonic_square(q.l, q.m, theta);
}

GridSpec default_grid(const QuantumNumbers& q) {
  return GridSpec{5.0 * q.n * q.n / q.Z, 2000, 1000};
}

ProfilePair sample_profiles(const QuantumNumbers& q, const GridSpec& grid) {
  if (!(grid.r_max > 0.0))
    throw std::invalid_argument("grid extent requires r_max > 0");
  if (grid.radial_points < 2 || grid.angular_points < 2)
    throw std::invalid_argument("grid resolution requires >= 2 points per axis");

  ProfilePair out;
  out.radial.abscissas.reserve(grid.radial_points);
  out.radial.values.reserve(grid.radial_points);
  for (int i = 0; i < grid.radial_points; ++i) {
    const double r = grid.r_max * i / (grid.radial_points - 1);
    out.radial.abscissas.push_back(r);
    out.radial.values.push_back(radial_density(q, r));
  }
  out.angular.abscissas.reserve(grid.angular_points);
  out.angular.values.reserve(grid.angular_points);
  for (int i = 0; i < grid.angular_points; ++i) {
    const double theta = M_PI * i / (grid.angular_points - 1);
    out.angular.abscissas.push_back(theta);
    out.angular.values.push_back(angular_density(q.l, q.m, theta));
  }
  return out;
}

}  // namespace hydrocomp::orbital
