#pragma once

#include <complex>
#include <span>
#include <vector>

namespace framex {

using complex = std::complex<double>;

/// The m+1 equispaced points x_i = (2i - m)/m on [-1, 1].
struct EquispacedGrid {
  int m = 0;
  std::vector<double> nodes;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = -1.0;
  double b = 1.0;

  /// Sum of w_i * f(x_i).
  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Throws InvalidArgument for m < 1.
EquispacedGrid equispaced_grid(int m);

/// `count` equispaced points on [-1, 1] including both endpoints (count >= 2).
std::vector<double> fine_grid(int count);

/// P_0(x) .. P_n(x), normalized so that P_i(1) = 1.
std::vector<double> legendre_eval(int n, double x);

/// k-th derivatives P_0^{(k)}(x) .. P_n^{(k)}(x). Entries with i < k are
/// exactly zero.
std::vector<double> legendre_deriv_eval(int n, int k, double x);

/// T_0(x) .. T_n(x).
std::vector<double> chebyshev_eval(int n, double x);

/// Gauss-Legendre rule with `count` nodes on [a, b].
///
/// Nodes are Newton-refined roots of P_count started from Chebyshev-like
/// guesses; throws NumericalFailure if a root does not converge in 100 steps.
QuadratureRule gauss_legendre(int count, double a = -1.0, double b = 1.0);

struct DiscreteNorms {
  double sup = 0.0;
  double l2 = 0.0;
};

/// ||g||_{m,inf} and ||g||_{m,2} = sqrt(2/(m+1) sum |g_i|^2) for a vector of
/// m+1 grid values.
DiscreteNorms discrete_norms(std::span<const complex> values);
DiscreteNorms discrete_norms(std::span<const double> values);

}  // namespace framex
