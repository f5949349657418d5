#include "hydrocomp/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "hydrocomp/specfun.hpp"

namespace hydrocomp::entropy {

namespace {

// Recurrence coefficients of the monic orthogonal polynomials:
//   p_{k+1} = (x - a_k) p_k - b_k p_{k-1}
// The Jacobi matrix has a_k on the diagonal and sqrt(b_k) off it.
void recurrence(QuadratureFamily family, double alpha, int k, double* a,
                double* b) {
  switch (family) {
    case QuadratureFamily::GaussLegendre:
      *a = 0.0;
      *b = static_cast<double>(k) * k / (4.0 * k * k - 1.0);
      return;
    case QuadratureFamily::GaussLaguerre:
      *a = 2.0 * k + alpha + 1.0;
      *b = k * (k + alpha);
      return;
  }
  throw std::logic_error("unknown quadrature family");
}

double weight_integral(QuadratureFamily family, double alpha) {
  if (family == QuadratureFamily::GaussLegendre) return 2.0;
  return std::exp(specfun::log_gamma(alpha + 1.0));  // Gamma(alpha+1)
}

}  // namespace

// Gauss weight at a node via the Christoffel function,
// w = 1 / sum_k phat_k(x)^2 over the orthonormal polynomials of the family.
// The first-eigenvector form of Golub-Welsch computes the same number as
// mu0 * v0^2, but at large Laguerre alpha mu0 = Gamma(alpha+1) amplifies the
// eigenvector's absolute error (~1e-16) into garbage tail weights; the
// Christoffel sum keeps full relative accuracy at every node.
double christoffel_weight(QuadratureFamily family, double alpha, int order,
                          double x, double mu0) {
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(mu0);
  double sum = cur * cur;
  for (int k = 0; k < order - 1; ++k) {
    double a_k = 0.0, b_k = 0.0, a_next = 0.0, b_next = 0.0;
    recurrence(family, alpha, k, &a_k, &b_k);
    recurrence(family, alpha, k + 1, &a_next, &b_next);
    const double next =
        ((x - a_k) * cur - std::sqrt(b_k) * prev) / std::sqrt(b_next);
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (!(sum < 1e300)) return 0.0;  // tail node, true weight underflows
  }
  return 1.0 / sum;
}

QuadratureRule build_rule(QuadratureFamily family, int order, double alpha) {
  if (order < 1) throw std::domain_error("quadrature order must be >= 1");
  if (family == QuadratureFamily::GaussLaguerre && !(alpha > -1.0))
    throw std::domain_error("Gauss-Laguerre requires alpha > -1");

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 0; k < order; ++k) {
    double a = 0.0, b = 0.0;
    recurrence(family, alpha, k, &a, &b);
    jacobi(k, k) = a;
    if (k > 0) {
      const double off = std::sqrt(b);
      jacobi(k, k - 1) = off;
      jacobi(k - 1, k) = off;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("quadrature eigensolver failed to converge");

  const double mu0 = weight_integral(family, alpha);
  QuadratureRule rule{family, alpha, order, {}, {}};
  rule.nodes.reserve(order);
  rule.weights.reserve(order);
  for (int i = 0; i < order; ++i) {
    const double x = solver.eigenvalues()(i);
    const double w = christoffel_weight(family, alpha, order, x, mu0);
    if (w <= 0.0) continue;  // underflowed tail point, numerically inert
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

namespace {

std::vector<double> tridiagonal_eigenvalues(
    const std::function<void(int, double*, double*)>& coeffs, int size) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(size, size);
  for (int k = 0; k < size; ++k) {
    double a = 0.0, b = 0.0;
    coeffs(k, &a, &b);
    jacobi(k, k) = a;
    if (k > 0) {
      const double off = std::sqrt(b);
      jacobi(k, k - 1) = off;
      jacobi(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      jacobi, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("polynomial zero eigensolver failed");
  std::vector<double> zeros(size);
  for (int i = 0; i < size; ++i) zeros[i] = solver.eigenvalues()(i);
  return zeros;
}

}  // namespace

std::vector<double> laguerre_zeros(int degree, double alpha) {
  if (degree < 0) throw std::domain_error("degree must be >= 0");
  if (!(alpha > -1.0)) throw std::domain_error("requires alpha > -1");
  if (degree == 0) return {};
  return tridiagonal_eigenvalues(
      [&](int k, double* a, double* b) {
        recurrence(QuadratureFamily::GaussLaguerre, alpha, k, a, b);
      },
      degree);
}

std::vector<double> gegenbauer_zeros(int degree, double lambda) {
  if (degree < 0) throw std::domain_error("degree must be >= 0");
  if (!(lambda > -0.5)) throw std::domain_error("requires lambda > -1/2");
  if (degree == 0) return {};
  return tridiagonal_eigenvalues(
      [&](int k, double* a, double* b) {
        *a = 0.0;
        // monic ultraspherical recurrence
        *b = k * (k + 2.0 * lambda - 1.0) /
             (4.0 * (k + lambda) * (k + lambda - 1.0));
      },
      degree);
}

const QuadratureRule& shared_rule(QuadratureFamily family, int order,
                                  double alpha) {
  using CacheKey = std::tuple<int, int, double>;
  static std::mutex mutex;
  static std::map<CacheKey, std::unique_ptr<QuadratureRule>> cache;

  const CacheKey key{static_cast<int>(family), order, alpha};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache
             .emplace(key, std::make_unique<QuadratureRule>(
                               build_rule(family, order, alpha)))
             .first;
  }
  return *it->second;
}

}  // namespace hydrocomp::entropy
