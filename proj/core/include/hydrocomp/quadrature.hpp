#pragma once

#include <vector>

// Gaussian quadrature rules built by the Golub-Welsch construction: the
// nodes are the eigenvalues of the symmetric tridiagonal Jacobi matrix of
// the family's recurrence, the weights come from the first eigenvector
// components.

namespace hydrocomp::entropy {

enum class QuadratureFamily {
  GaussLegendre,  // weight 1 on [-1, 1]
  GaussLaguerre,  // weight x^alpha e^{-x} on [0, inf)
};

struct QuadratureRule {
  QuadratureFamily family;
  double alpha;  // Laguerre parameter; unused for Legendre
  int order;     // requested order (number of points before tail trimming)
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive

  // integral of f against the family weight
  template <typename F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

// Builds the rule.  Throws std::domain_error for order < 1 or Laguerre
// alpha <= -1, std::runtime_error if the eigensolver fails.  Trailing points
// whose weights underflow double precision are dropped; they cannot
// contribute to any sum in double arithmetic.
QuadratureRule build_rule(QuadratureFamily family, int order,
                          double alpha = 0.0);

// Process-wide immutable cache of built rules (rules are expensive at high
// order and shared freely across threads).
const QuadratureRule& shared_rule(QuadratureFamily family, int order,
                                  double alpha = 0.0);

// Zeros of the classical polynomials, as eigenvalues of the same Jacobi
// matrices (strictly increasing).  Degree 0 returns an empty vector.
std::vector<double> laguerre_zeros(int degree, double alpha);
std::vector<double> gegenbauer_zeros(int degree, double lambda);

}  // namespace hydrocomp::entropy
