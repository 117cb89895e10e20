#pragma once

#include <cmath>
#include <numbers>

#include "fgps/types.hpp"

namespace fgps {

namespace detail {

// Symmetric-Jacobi family P_n^{(a,a)} with a = lambda - 1/2. It shares its
// zeros with the Gegenbauer polynomial of index lambda and stays
// non-degenerate at lambda = 0, where the classical Gegenbauer recurrence
// collapses.
template <typename Scalar>
Scalar jacobi_symmetric_eval(Scalar lambda, Index degree, Scalar x) {
  if (degree == 0) return Scalar(1);
  Scalar pm1 = Scalar(1);
  Scalar p = (lambda + Scalar(0.5)) * x;
  for (Index n = 2; n <= degree; ++n) {
    const Scalar nn = Scalar(n);
    const Scalar c0 = Scalar(2) * nn + Scalar(2) * lambda;  // 2n + 2lambda
    const Scalar num_x = (c0 - Scalar(2)) * (c0 - Scalar(1)) * (c0 - Scalar(3));
    const Scalar half = nn + lambda - Scalar(1.5);
    const Scalar num_m = Scalar(2) * half * half * (c0 - Scalar(1));
    const Scalar den = Scalar(2) * nn * (nn + Scalar(2) * lambda - Scalar(1)) * (c0 - Scalar(3));
    const Scalar pn = (num_x * x * p - num_m * pm1) / den;
    pm1 = p;
    p = pn;
  }
  return p;
}

template <typename Scalar>
Scalar jacobi_symmetric_derivative(Scalar lambda, Index degree, Scalar x) {
  if (degree == 0) return Scalar(0);
  // d/dx P_n^{(a,a)} = (n + 2*lambda)/2 * P_{n-1}^{(a+1,a+1)}
  return Scalar(0.5) * (Scalar(degree) + Scalar(2) * lambda) *
         jacobi_symmetric_eval(lambda + Scalar(1), degree - 1, x);
}

template <typename Scalar>
void require_lambda(Scalar lambda) {
  if (!(lambda > Scalar(-0.5)))
    throw std::invalid_argument("gegenbauer: lambda must exceed -1/2");
}

// Newton iteration on the recurrence, started from Chebyshev zeros. Valid for
// any lambda > -1/2; the lambda = 0 closed form bypasses it.
template <typename Scalar>
Vector<Scalar> gg_nodes_newton(Scalar lambda, Index n_g) {
  require_lambda(lambda);
  const Index d = n_g + 1;  // polynomial degree = number of roots
  Vector<Scalar> x(d);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (Index i = 0; i < d; ++i)
    x[i] = std::cos(Scalar(2 * (d - 1 - i) + 1) * pi / Scalar(2 * d));

  for (Index i = 0; i < d; ++i) {
    Scalar xi = x[i];
    bool done = false;
    for (int it = 0; it < 60; ++it) {
      const Scalar f = jacobi_symmetric_eval(lambda, d, xi);
      const Scalar df = jacobi_symmetric_derivative(lambda, d, xi);
      const Scalar dx = f / df;
      xi -= dx;
      if (xi >= Scalar(1)) xi = Scalar(1) - Scalar(1e-12);
      if (xi <= Scalar(-1)) xi = Scalar(-1) + Scalar(1e-12);
      if (std::abs(dx) <= Scalar(4) * std::numeric_limits<Scalar>::epsilon() * (Scalar(1) + std::abs(xi))) {
        done = true;
        break;
      }
    }
    if (!done)
      throw NumericError("gg_nodes: Newton iteration failed to converge",
                         double(xi), std::numeric_limits<double>::quiet_NaN(), i);
    x[i] = xi;
  }

  // Enforce the exact symmetry of the Gauss set about the origin.
  for (Index i = 0; i < d / 2; ++i) {
    const Scalar s = Scalar(0.5) * (x[i] - x[d - 1 - i]);
    x[i] = s;
    x[d - 1 - i] = -s;
  }
  if (d % 2 == 1) x[d / 2] = Scalar(0);

  for (Index i = 0; i + 1 < d; ++i)
    if (!(x[i] < x[i + 1]))
      throw NumericError("gg_nodes: roots are not strictly increasing",
                         double(x[i]), std::numeric_limits<double>::quiet_NaN(), i);
  return x;
}

}  // namespace detail

/// Value of the degree-th member of the symmetric-Jacobi (Gegenbauer-zero)
/// family with index lambda at x. Only the zeros matter downstream, so the
/// normalization is the standard Jacobi one; at lambda = 1/2 this is the
/// Legendre polynomial, at lambda = 0 a scaled Chebyshev polynomial.
template <typename Scalar>
Scalar gegenbauer_poly_eval(Scalar lambda, Index degree, Scalar x) {
  detail::require_lambda(lambda);
  if (degree < 0) throw std::invalid_argument("gegenbauer_poly_eval: degree must be >= 0");
  return detail::jacobi_symmetric_eval(lambda, degree, x);
}

/// The N_G + 1 Gegenbauer-Gauss nodes: roots of the (N_G+1)st-degree
/// polynomial of index lambda, sorted ascending in (-1, 1).
template <typename Scalar>
Vector<Scalar> gg_nodes(Scalar lambda, Index n_g) {
  detail::require_lambda(lambda);
  if (n_g < 0) throw std::invalid_argument("gg_nodes: n_g must be >= 0");
  if (lambda == Scalar(0)) {
    // Chebyshev zeros, ascending.
    const Index d = n_g + 1;
    Vector<Scalar> x(d);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (Index i = 0; i < d; ++i)
      x[i] = std::cos(Scalar(2 * (d - 1 - i) + 1) * pi / Scalar(2 * d));
    for (Index i = 0; i < d / 2; ++i) {
      const Scalar s = Scalar(0.5) * (x[i] - x[d - 1 - i]);
      x[i] = s;
      x[d - 1 - i] = -s;
    }
    if (d % 2 == 1) x[d / 2] = Scalar(0);
    return x;
  }
  return detail::gg_nodes_newton(lambda, n_g);
}

namespace detail {

// Classical n-point Gauss-Legendre rule on [-1, 1]; the auxiliary rule behind
// integration_vector. Weights via w = 2 / ((1 - x^2) P_n'(x)^2).
template <typename Scalar>
std::pair<Vector<Scalar>, Vector<Scalar>> gauss_legendre_rule(Index n) {
  const Vector<Scalar> x = gg_nodes_newton(Scalar(0.5), n - 1);
  Vector<Scalar> w(n);
  for (Index i = 0; i < n; ++i) {
    const Scalar dp = jacobi_symmetric_derivative(Scalar(0.5), n, x[i]);
    w[i] = Scalar(2) / ((Scalar(1) - x[i] * x[i]) * dp * dp);
  }
  return {x, w};
}

}  // namespace detail

/// Interpolatory integration row vector P over [-1, 1] for the given nodes:
/// P_j = integral of the j-th Lagrange cardinal, evaluated exactly with an
/// auxiliary Gauss-Legendre rule of matching size. Barycentric weights are
/// formed in the log domain so large node counts cannot overflow.
template <typename Scalar>
Vector<Scalar> integration_vector(const Vector<Scalar>& nodes) {
  const Index d = nodes.size();
  if (d == 0) throw std::invalid_argument("integration_vector: empty node set");
  for (Index i = 0; i < d; ++i) {
    if (!(nodes[i] > Scalar(-1) && nodes[i] < Scalar(1)))
      throw std::invalid_argument("integration_vector: nodes must lie inside (-1, 1)");
    for (Index j = i + 1; j < d; ++j)
      if (nodes[i] == nodes[j])
        throw std::invalid_argument("integration_vector: duplicate nodes");
  }

  // Barycentric weights up to a common scale (the scale cancels in the
  // second barycentric formula).
  Vector<Scalar> logw(d), sign(d);
  for (Index j = 0; j < d; ++j) {
    Scalar lw = Scalar(0), sg = Scalar(1);
    for (Index k = 0; k < d; ++k) {
      if (k == j) continue;
      const Scalar diff = nodes[j] - nodes[k];
      lw -= std::log(std::abs(diff));
      if (diff < Scalar(0)) sg = -sg;
    }
    logw[j] = lw;
    sign[j] = sg;
  }
  const Scalar lmax = logw.maxCoeff();
  Vector<Scalar> bw(d);
  for (Index j = 0; j < d; ++j) bw[j] = sign[j] * std::exp(logw[j] - lmax);

  const auto [gx, gw] = detail::gauss_legendre_rule<Scalar>(d);

  Vector<Scalar> p = Vector<Scalar>::Zero(d);
  for (Index q = 0; q < d; ++q) {
    const Scalar y = gx[q];
    // Exact hit on an interpolation node: the cardinal is a Kronecker delta.
    Index hit = -1;
    for (Index j = 0; j < d; ++j)
      if (y == nodes[j]) { hit = j; break; }
    if (hit >= 0) {
      p[hit] += gw[q];
      continue;
    }
    Scalar denom = Scalar(0);
    for (Index j = 0; j < d; ++j) denom += bw[j] / (y - nodes[j]);
    for (Index j = 0; j < d; ++j) p[j] += gw[q] * (bw[j] / (y - nodes[j])) / denom;
  }
  return p;
}

/// Leading coefficient K_l of the l-th degree shifted Gegenbauer polynomial,
/// K_l = 2^{2l-1} Gamma(2*lambda+1) Gamma(l+lambda) /
///       (Gamma(lambda+1) Gamma(l+2*lambda)).
/// The lambda -> 0 limit of the Gamma ratio is taken analytically; K_0 = 1
/// for every admissible lambda.
template <typename Scalar>
Scalar leading_coefficient(Scalar lambda, Index degree) {
  detail::require_lambda(lambda);
  if (degree < 0) throw std::invalid_argument("leading_coefficient: degree must be >= 0");
  if (degree == 0) return Scalar(1);
  if (lambda == Scalar(0)) return std::exp2(Scalar(2 * degree - 1));
  const Scalar l = Scalar(degree);
  const Scalar lg = std::lgamma(Scalar(2) * lambda + Scalar(1)) + std::lgamma(l + lambda) -
                    std::lgamma(lambda + Scalar(1)) - std::lgamma(l + Scalar(2) * lambda);
  return std::exp2(Scalar(2 * degree - 1)) * std::exp(lg);
}

/// A Gegenbauer-Gauss quadrature data set: the nodes on (-1, 1), their shift
/// to (0, 1), and the plain-integral row vector P.
template <typename Scalar>
struct GegenbauerRule {
  Scalar lambda{};
  Index n_g{};
  Vector<Scalar> nodes;
  Vector<Scalar> shifted_nodes;
  Vector<Scalar> integration_vector;

  static GegenbauerRule build(Scalar lambda, Index n_g) {
    GegenbauerRule rule;
    rule.lambda = lambda;
    rule.n_g = n_g;
    rule.nodes = gg_nodes(lambda, n_g);
    rule.shifted_nodes = ((rule.nodes.array() + Scalar(1)) / Scalar(2)).matrix();
    rule.integration_vector = fgps::integration_vector(rule.nodes);
    return rule;
  }
};

}  // namespace fgps
