#include "hydrocomp/entropy.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "hydrocomp/specfun.hpp"

namespace hydrocomp::entropy {

namespace {

// y^2 ln y^2 with the x ln x -> 0 limit made explicit at polynomial zeros.
double sq_log_sq(double y) {
  const double y2 = y * y;
  if (y2 < 1e-300) return 0.0;
  return y2 * std::log(y2);
}

// Gauss-Legendre panel integral of f over [a, b].
template <typename F>
double panel_integral(const QuadratureRule& legendre, double a, double b,
                      F&& f) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t j = 0; j < legendre.nodes.size(); ++j)
    sum += legendre.weights[j] * f(mid + half * legendre.nodes[j]);
  return half * sum;
}

// One ladder rung for the Laguerre entropic integral: the domain is split at
// the zeros of the polynomial, so each finite panel sees only endpoint
// singularities of type t^2 ln t (fast Gauss convergence) and the tail panel
// sees none at all.  A plain global rule stalls near 1e-5 relative once the
// zeros sit inside the weight's bulk (large alpha); the split restores
// spectral behaviour at the same ladder orders.
double laguerre_entropic_estimate(int degree, double alpha, int i,
                                  int order) {
  auto integrand = [&](double x) {  // x^{alpha+i} e^{-x} Lhat^2 ln Lhat^2
    if (x <= 0.0) return 0.0;
    const double scale = std::exp((alpha + i) * std::log(x) - x);
    if (scale == 0.0) return 0.0;
    return scale * sq_log_sq(specfun::laguerre_orthonormal(degree, alpha, x));
  };

  const QuadratureRule& legendre =
      shared_rule(QuadratureFamily::GaussLegendre, order);
  double sum = 0.0;
  double left = 0.0;
  for (double z : laguerre_zeros(degree, alpha)) {
    sum += panel_integral(legendre, left, z, integrand);
    left = z;
  }
  // Tail [left, T] in moderate-width panels; beyond the weight's peak at
  // x ~ alpha+i+2*degree the integrand falls like e^{-x} x^{alpha+i+2k}, so
  // T = peak + 160 truncates below 1e-20 of the total.
  const double cutoff = alpha + i + 2.0 * degree + 160.0;
  const double width = 12.0;
  for (double a = left; a < cutoff; a += width)
    sum += panel_integral(legendre, a, std::min(a + width, cutoff), integrand);
  return sum;
}

double gegenbauer_entropic_estimate(int degree, double lambda, int m,
                                    int order) {
  auto integrand = [&](double x) {
    const double w = specfun::ipow(1.0 - x * x, m);
    return w * sq_log_sq(specfun::gegenbauer_orthonormal(degree, lambda, x));
  };
  const QuadratureRule& legendre =
      shared_rule(QuadratureFamily::GaussLegendre, order);
  double sum = 0.0;
  double left = -1.0;
  for (double z : gegenbauer_zeros(degree, lambda)) {
    sum += panel_integral(legendre, left, z, integrand);
    left = z;
  }
  sum += panel_integral(legendre, left, 1.0, integrand);
  return sum;
}

IntegralResult run_ladder(const QuadratureSettings& settings,
                          const std::function<double(int)>& estimate,
                          const char* label) {
  if (settings.order_ladder.empty())
    throw std::invalid_argument("quadrature order ladder must not be empty");
  double prev = estimate(settings.order_ladder.front());
  if (settings.order_ladder.size() == 1)
    return IntegralResult{prev, settings.order_ladder.front(), 0.0};
  for (std::size_t i = 1; i < settings.order_ladder.size(); ++i) {
    const int order = settings.order_ladder[i];
    const double last = estimate(order);
    const double delta = std::abs(last - prev);
    if (delta < std::max(settings.rel_tol * std::abs(last), settings.abs_tol))
      return IntegralResult{last, order, delta};
    if (i + 1 == settings.order_ladder.size()) {
      throw ConvergenceError(std::string(label) +
                                 ": quadrature ladder exhausted without "
                                 "convergence (estimates " +
                                 std::to_string(prev) + " and " +
                                 std::to_string(last) + ")",
                             prev, last);
    }
    prev = last;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

IntegralResult entropic_integral_laguerre_info(
    int degree, double alpha, int i, const QuadratureSettings& settings) {
  if (!(alpha > -1.0))
    throw std::domain_error("entropic integral requires alpha > -1");
  if (i != 0 && i != 1)
    throw std::domain_error("entropic integral moment index must be 0 or 1");
  if (degree < 0) throw std::domain_error("degree must be >= 0");

  auto estimate = [&](int order) {
    return laguerre_entropic_estimate(degree, alpha, i, order);
  };
  return run_ladder(settings, estimate, "E_i(Laguerre)");
}

double entropic_integral_laguerre(int degree, double alpha, int i,
                                  const QuadratureSettings& settings) {
  return entropic_integral_laguerre_info(degree, alpha, i, settings).value;
}

IntegralResult entropic_integral_gegenbauer_info(
    int degree, double lambda, const QuadratureSettings& settings) {
  if (degree < 0) throw std::domain_error("degree must be >= 0");
  const double mu = lambda - 0.5;
  const int m = static_cast<int>(std::lround(mu));
  if (m < 0 || std::abs(mu - m) > 1e-12)
    throw std::domain_error(
        "Gegenbauer entropic integral requires lambda = |m| + 1/2 with "
        "integer |m| >= 0");

  auto estimate = [&](int order) {
    return gegenbauer_entropic_estimate(degree, lambda, m, order);
  };
  return run_ladder(settings, estimate, "E(Gegenbauer)");
}

double entropic_integral_gegenbauer(int degree, double lambda,
                                    const QuadratureSettings& settings) {
  return entropic_integral_gegenbauer_info(degree, lambda, settings).value;
}

double shannon_a1(int n, int l) {
  const double dn = n;
  return std::log(dn * dn * dn * dn / 4.0) +
         (3.0 * dn * dn - l * (l + 1.0)) / dn -
         2.0 * l *
             ((2.0 * dn - 2.0 * l - 1.0) / (2.0 * dn) +
              specfun::digamma(dn + l + 1.0));
}

double shannon_a2(int l, int m) {
  const int mu = std::abs(m);
  // psi(l+m+1) is evaluated at l+|m|+1: the density depends on |m| only, and
  // l+m+1 <= 0 would sit on a digamma pole for m < -l.
  return std::log(std::exp2(2.0 * mu + 1.0) * M_PI) -
         2.0 * mu *
             (specfun::digamma(l + mu + 1.0) - specfun::digamma(l + 0.5) -
              1.0 / (2.0 * l + 1.0));
}

EntropyBreakdown shannon_entropy(const orbital::QuantumNumbers& q,
                                 const QuadratureSettings& settings) {
  const int mu = std::abs(q.m);
  const IntegralResult e1 = entropic_integral_laguerre_info(
      q.radial_nodes(), 2.0 * q.l + 1.0, 1, settings);
  const IntegralResult eg =
      entropic_integral_gegenbauer_info(q.l - mu, mu + 0.5, settings);

  EntropyBreakdown out{};
  out.a1 = shannon_a1(q.n, q.l);
  out.a2 = shannon_a2(q.l, q.m);
  out.e1_laguerre = e1.value;
  out.e_gegenbauer = eg.value;
  out.s_radial = out.a1 - e1.value / (2.0 * q.n) - 3.0 * std::log(q.Z);
  out.s_angular = out.a2 - eg.value;
  out.s_total = out.s_radial + out.s_angular;
  out.b = out.s_total + 3.0 * std::log(q.Z);
  out.e1_order = e1.order_used;
  out.e1_delta = e1.delta;
  out.eg_order = eg.order_used;
  out.eg_delta = eg.delta;
  return out;
}

}  // namespace hydrocomp::entropy
