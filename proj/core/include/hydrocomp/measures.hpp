#pragma once

#include "hydrocomp/entropy.hpp"
#include "hydrocomp/orbital.hpp"

// Closed-form spreading measures, the disequilibrium, the three composite
// complexities (Cramer-Rao, Fisher-Shannon, LMC shape complexity), the
// variational upper bounds and the zeta/xi ratios.

namespace hydrocomp::measures {

using orbital::QuantumNumbers;

// V[rho] = [n^2 (n^2+2) - l^2 (l+1)^2] / (4 Z^2), in a.u.^2.
double variance(const QuantumNumbers& q);

// I[rho] = (4 Z^2 / n^3) (n - |m|), in a.u.^-2.
double fisher(const QuantumNumbers& q);

// <r> = [3 n^2 - l (l+1)] / (2 Z).
double mean_radius(const QuantumNumbers& q);

// Z-free disequilibrium factor D(n, l, m); <rho> = Z^3 D(n, l, m).
double disequilibrium_factor(int n, int l, int m);

// Radial part of <rho>: (Z^3 2^{2-4n} / n^5) sum over the Laguerre
// linearization, with every term accumulated in log space.
double radial_disequilibrium(const QuantumNumbers& q);

// Angular part of <rho>: the 3j-squared sum over l' = 2|m| .. 2l, with exact
// rational 3j squares converted to floating point per term.
double angular_disequilibrium(int l, int m);

// <rho> = integral rho^2 = radial part * angular part, in a.u.^-3.
double disequilibrium(const QuantumNumbers& q);

// C_CR = I * V = (n - |m|)/n^3 * [n^2 (n^2+2) - l^2 (l+1)^2]; Z-free.
double cramer_rao(const QuantumNumbers& q);

// C_FS = [4 (n-|m|)/n^3] * (1/2 pi e) * exp(2 B(n,l,m)/3); Z-free.
double fisher_shannon(const QuantumNumbers& q,
                      const entropy::QuadratureSettings& settings = {});

// C_SC = D(n,l,m) * exp(B(n,l,m)); Z-free.
double shape_complexity(const QuantumNumbers& q,
                        const entropy::QuadratureSettings& settings = {});

struct BoundsReport {
  double bound_fs;  // B_FS = (2e / 9 pi^{1/3}) (n-|m|)/n^3 [3n^2 - l(l+1)]^2
  double bound_sc;  // B_SC = (pi e^3 / 27) [3n^2 - l(l+1)]^3 D(n,l,m)
  double xi_fs;     // (B_FS - C_FS) / C_FS
  double xi_sc;     // (B_SC - C_SC) / C_SC
};

BoundsReport bounds(const QuantumNumbers& q,
                    const entropy::QuadratureSettings& settings = {});

enum class MeasureKind {
  Variance,
  Fisher,
  Shannon,
  Disequilibrium,
  CramerRao,
  FisherShannon,
  ShapeComplexity,
};

// Value of the measure at q divided by its value at the ground state
// (1, 0, 0) with the same Z.  Ground-state denominators are computed once
// per (kind, Z, quadrature settings) and cached.
double zeta(MeasureKind kind, const QuantumNumbers& q,
            const entropy::QuadratureSettings& settings = {});

double measure_value(MeasureKind kind, const QuantumNumbers& q,
                     const entropy::QuadratureSettings& settings = {});

// Everything for one orbital.
struct MeasureReport {
  QuantumNumbers q;
  double variance;
  double fisher;
  double shannon;          // S[rho] (Z-dependent)
  double entropic_power;   // exp(S[rho])
  double disequilibrium;   // <rho>
  double cramer_rao;
  double fisher_shannon;
  double shape_complexity;
  double bound_fs;
  double bound_sc;
  double xi_fs;
  double xi_sc;
  entropy::EntropyBreakdown entropy;  // includes quadrature metadata
};

MeasureReport report(const QuantumNumbers& q,
                     const entropy::QuadratureSettings& settings = {});

// Ordinary least-squares quadratic fit a x^2 + b x + c; r is the Pearson
// correlation between the fitted and the input values.
struct QuadraticFit {
  double a;
  double b;
  double c;
  double r;
};

QuadraticFit quadratic_least_squares(const std::vector<double>& x,
                                     const std::vector<double>& y);

// Fit of the Fisher-Shannon measure in ground-state units,
// zeta_FS(n, l, m) ~ a n^2 + b n + c, over n = n_from .. n_to.  The measure
// is normalized and the default range ends at n = 20 because that protocol
// reproduces the tabulated reference coefficients to all their printed
// digits.  Requires n_from >= l+1, |m| <= l and at least 4 points.
QuadraticFit fit_fisher_shannon_quadratic(
    int l, int m, int n_from, int n_to,
    const entropy::QuadratureSettings& settings = {});

inline constexpr int kDefaultFitLastN = 20;

}  // namespace hydrocomp::measures
