#pragma once

#include <string>

#include "hydrocomp/orbital.hpp"

// Brute-force evaluation of every measure directly from the density.  This
// is the ground truth the closed forms are validated against, so it shares
// no formula with the main path: plain composite quadrature, numeric
// derivatives, no polynomial identities.

namespace hydrocomp::oracle {

struct OracleResult {
  double value;
  double estimated_error;  // >= 0
  std::string method;      // grid / rule description
};

// <r^k> for k >= -1, by Gauss-Laguerre after the r~ = 2Zr/n substitution
// plus composite-Simpson confirmation on [0, 40 n^2/Z].  Throws
// std::runtime_error if the two routes disagree beyond 1e-7 relative.
OracleResult moment(const orbital::QuantumNumbers& q, int k);

// S[rho] = -integral rho ln rho, via the exact separable split
// S(R) + S(Y) with each 1D integral done by converging composite Simpson.
OracleResult shannon(const orbital::QuantumNumbers& q);

// I[rho] = integral |grad rho|^2 / rho with the gradient taken by central
// differences with Richardson extrapolation (steps h and h/2), integrated
// by product quadrature over (r, theta).  Points where rho < 1e-280
// contribute zero.
OracleResult fisher(const orbital::QuantumNumbers& q);

// <rho> = integral rho^2 = (integral r^2 R^4 dr) (2 pi integral |Y|^4
// sin(theta) dtheta).
OracleResult disequilibrium(const orbital::QuantumNumbers& q);

}  // namespace hydrocomp::oracle
