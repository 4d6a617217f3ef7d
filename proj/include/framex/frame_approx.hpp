#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "framex/core_numerics.hpp"

namespace framex {

using RealFunction = std::function<complex(double)>;

/// Orthonormal Legendre polynomials on [-gamma, gamma] up to degree n, used as
/// a frame on [-1, 1]. gamma == 1 gives the plain orthonormal Legendre basis.
struct FrameSpec {
  double gamma = 1.0;
  int n = 0;

  void validate() const;
};

/// Thin SVD A = U diag(sigma) V^T with sigma nonincreasing.
struct SvdFactors {
  Eigen::MatrixXd u;
  Eigen::VectorXd sigma;
  Eigen::MatrixXd v;
};

/// psi_0(x) .. psi_n(x) with psi_i(x) = sqrt(i + 1/2) P_i(x/gamma) / sqrt(gamma).
std::vector<double> frame_row(const FrameSpec& spec, double x);

struct LeastSquaresSystem {
  Eigen::MatrixXd a;
  EquispacedGrid grid;
};

/// A[i][j] = sqrt(2/(m+1)) psi_j(x_i) on the (m+1)-point equispaced grid.
LeastSquaresSystem assemble(const FrameSpec& spec, int m);

/// Dense thin SVD (column-pivoted QR followed by one-sided Jacobi). Requires
/// rows >= cols. Singular values below 1e-300 are flushed to zero.
SvdFactors svd(const Eigen::MatrixXd& a);

/// Outcome of the epsilon-truncated least-squares fit.
struct RegularizedFit {
  FrameSpec spec;
  int m = 0;
  double epsilon = 0.0;
  std::shared_ptr<const SvdFactors> factors;
  std::vector<int> kept;  ///< indices with sigma_i > epsilon, ascending
  Eigen::VectorXcd coeffs;
};

struct ConditionNumbers {
  double cond_2 = 0.0;
  double cond_inf = 0.0;
};

/// Upper-triangular R with R^T R = (2/G) E^T E on the G-point fine grid,
/// E[j][i] = psi_i(t_j). Reusable across every m for a fixed spec.
Eigen::MatrixXd fine_grid_factor(const FrameSpec& spec, int grid_size);

/// The linear map samples -> frame coefficients for one (spec, m, epsilon).
///
/// Holds the SVD of the least-squares matrix so that many sample vectors (and
/// several thresholds) can share one factorization.
class FrameApproximator {
public:
  FrameApproximator(FrameSpec spec, int m, double epsilon);
  FrameApproximator(FrameSpec spec, int m, double epsilon, std::shared_ptr<const SvdFactors> factors);

  /// Same factorization, different truncation threshold.
  FrameApproximator with_epsilon(double epsilon) const;

  const FrameSpec& spec() const { return spec_; }
  int m() const { return m_; }
  double epsilon() const { return epsilon_; }
  const SvdFactors& factors() const { return *factors_; }
  const std::vector<int>& kept() const { return kept_; }

  /// Throws InvalidArgument if samples.size() != m + 1.
  RegularizedFit fit(std::span<const complex> samples) const;

  /// Samples f on the equispaced grid and fits.
  RegularizedFit fit(const RealFunction& f) const;

  /// Discrete-L2 condition number sqrt(2/G) ||E V Sigma^+ U^T||_2. `factor` is
  /// fine_grid_factor(spec, G).
  double cond_l2(const Eigen::MatrixXd& factor) const;
  double cond_l2(int grid_size) const;

  /// sqrt(2/(m+1)) max_j sum_k |(E V Sigma^+ U^T)_{jk}| on a G-point fine grid.
  /// A lower bound for the continuum sup-norm condition number.
  double cond_sup(int grid_size) const;

private:
  FrameSpec spec_;
  int m_ = 0;
  double epsilon_ = 0.0;
  std::shared_ptr<const SvdFactors> factors_;
  std::vector<int> kept_;
};

/// Convenience wrapper: assemble, factor, and fit.
RegularizedFit fit(const FrameSpec& spec, int m, double epsilon, std::span<const complex> samples);

/// sum_i coeffs[i] psi_i(x) at each point.
std::vector<complex> evaluate(const RegularizedFit& fit, std::span<const double> points);
complex evaluate(const RegularizedFit& fit, double x);

struct FineGridErrors {
  double error_inf = 0.0;
  double error_l2 = 0.0;
};

/// Sup and discrete-L2 (weight 2/G) error of the approximant on G equispaced
/// points of [-1, 1].
FineGridErrors errors_on_fine_grid(const RegularizedFit& fit, const RealFunction& f,
                                   int grid_size = 50000);

ConditionNumbers condition_numbers(const FrameSpec& spec, int m, double epsilon,
                                   int fine_grid_size = 50000);

/// xi_i = sum_j (v_i)_j psi_j: orthonormal on [-gamma, gamma] and orthogonal in
/// the discrete inner product with <xi_j, xi_j>_{m,2} = sigma_j^2.
class SingularPolynomials {
public:
  SingularPolynomials(FrameSpec spec, int m);

  const FrameSpec& spec() const { return spec_; }
  int m() const { return m_; }
  const SvdFactors& factors() const { return *factors_; }

  /// xi_0(x) .. xi_n(x).
  Eigen::VectorXd values(double x) const;

private:
  FrameSpec spec_;
  int m_ = 0;
  std::shared_ptr<const SvdFactors> factors_;
};

SingularPolynomials singular_polynomials(const FrameSpec& spec, int m);

/// m = ceil(36 n log(1/epsilon) / sqrt(gamma^2 - 1)); needs gamma > 1 and
/// 0 < epsilon <= 1/e.
int scaling_m_of_n(int n, double epsilon, double gamma);

/// epsilon (n + 1) / sqrt(gamma).
double epsilon_prime(double epsilon, int n, double gamma);

}  // namespace framex
