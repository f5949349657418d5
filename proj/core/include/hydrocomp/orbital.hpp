#pragma once

#include <vector>

// The hydrogenic model: quantum-number validation, energies, radial and
// angular wavefunctions and probability densities, and pointwise evaluation
// of the full position density rho(r, theta).  Atomic units throughout.

namespace hydrocomp::orbital {

// A validated orbital label (n, l, m) plus the nuclear charge Z.
struct QuantumNumbers {
  int n;
  int l;
  int m;
  double Z;

  // Throws std::invalid_argument naming the violated constraint.
  QuantumNumbers(int n, int l, int m, double Z = 1.0);

  // Radial node count n_r = n - l - 1.
  int radial_nodes() const { return n - l - 1; }
};

// Bound-state energy -Z^2 / (2 n^2) in Hartree.
double energy(const QuantumNumbers& q);

// Radial eigenfunction R_{n,l}(r), normalized so that
// integral r^2 R^2 dr = 1.  Requires r >= 0.
double radial_wavefunction(const QuantumNumbers& q, double r);

// Radial probability density D_{n,l}(r) = r^2 R_{n,l}^2(r).
double radial_density(const QuantumNumbers& q, double r);

// |Y_{l,m}(theta, .)|^2; phi-independent.  Evaluated through the Gegenbauer
// form with |m| in both the polynomial indices and the sin(theta) power.
double harmonic_square(int l, int m, double theta);

// Angular probability density Theta_{l,m}(theta) = |Y_{l,m}|^2 sin(theta),
// normalized so that 2 pi * integral_0^pi Theta dtheta = 1.
double angular_density(int l, int m, double theta);

// Total position density rho(r, theta) = R^2 |Y|^2.  The density carries no
// phi dependence; the phi argument exists only so callers can state that.
double total_density(const QuantumNumbers& q, double r, double theta,
                     double phi = 0.0);

// A tabulated 1D density: D_{n,l} over r, or Theta_{l,m} over theta.
struct DensityProfile {
  std::vector<double> abscissas;
  std::vector<double> values;
};

struct ProfilePair {
  DensityProfile radial;   // r in [0, r_max]
  DensityProfile angular;  // theta in [0, pi]
};

struct GridSpec {
  double r_max;
  int radial_points;
  int angular_points;
};

// Default grid: r in [0, 5 n^2/Z] with 2000 points, theta with 1000 points.
GridSpec default_grid(const QuantumNumbers& q);

// Tabulates D_{n,l} and Theta_{l,m} on the given grid.  Throws
// std::invalid_argument for non-positive extent or fewer than 2 points.
ProfilePair sample_profiles(const QuantumNumbers& q, const GridSpec& grid);

}  // namespace hydrocomp::orbital
