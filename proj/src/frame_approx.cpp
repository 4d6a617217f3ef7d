#include "framex/frame_approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "framex/errors.hpp"
#include "framex/parallel.hpp"

namespace framex {

namespace {

constexpr double kSigmaFlush = 1e-300;
constexpr int kPowerIterations = 200;
constexpr double kPowerTolerance = 1e-8;
constexpr std::uint64_t kPowerSeed = 0x5eedf00dULL;
constexpr Eigen::Index kRowBlock = 256;

void check_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) throw NumericalFailure(std::string(what) + ": non-finite values");
}

// Rows psi(t_j) for a block of fine-grid points.
Eigen::MatrixXd frame_block(const FrameSpec& spec, std::span<const double> points) {
  Eigen::MatrixXd e(static_cast<Eigen::Index>(points.size()), spec.n + 1);
  for (Eigen::Index j = 0; j < e.rows(); ++j) {
    const auto row = frame_row(spec, points[j]);
    for (int i = 0; i <= spec.n; ++i) e(j, i) = row[i];
  }
  return e;
}

}  // namespace

void FrameSpec::validate() const {
  require(gamma >= 1.0 && std::isfinite(gamma), "FrameSpec: gamma must be >= 1");
  require(n >= 0, "FrameSpec: n must be >= 0");
}

std::vector<double> frame_row(const FrameSpec& spec, double x) {
  auto p = legendre_eval(spec.n, x / spec.gamma);
  const double inv_sqrt_gamma = 1.0 / std::sqrt(spec.gamma);
  for (int i = 0; i <= spec.n; ++i) p[i] *= std::sqrt(i + 0.5) * inv_sqrt_gamma;
  return p;
}

LeastSquaresSystem assemble(const FrameSpec& spec, int m) {
  spec.validate();
  LeastSquaresSystem sys{Eigen::MatrixXd(m + 1, spec.n + 1), equispaced_grid(m)};
  const double scale = std::sqrt(2.0 / (m + 1.0));
  for (int i = 0; i <= m; ++i) {
    const auto row = frame_row(spec, sys.grid.nodes[i]);
    for (int j = 0; j <= spec.n; ++j) sys.a(i, j) = scale * row[j];
  }
  return sys;
}

SvdFactors svd(const Eigen::MatrixXd& a) {
  require(a.rows() >= a.cols(), "svd: need rows >= cols");
  require(a.cols() >= 1, "svd: empty matrix");
  check_finite(a, "svd input");
  Eigen::JacobiSVD<Eigen::MatrixXd, Eigen::ColPivHouseholderQRPreconditioner> solver(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) throw NumericalFailure("svd: Jacobi iteration failed");
  SvdFactors out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  check_finite(out.u, "svd U");
  check_finite(out.v, "svd V");
  for (Eigen::Index i = 0; i < out.sigma.size(); ++i)
    if (out.sigma[i] < kSigmaFlush) out.sigma[i] = 0.0;
  return out;
}

Eigen::MatrixXd fine_grid_factor(const FrameSpec& spec, int grid_size) {
  spec.validate();
  const auto points = fine_grid(grid_size);
  const Eigen::Index cols = spec.n + 1;
  // Blocked QR: fold each block of rows into the running triangular factor.
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(0, cols);
  for (std::size_t start = 0; start < points.size(); start += kRowBlock) {
    const std::size_t len = std::min<std::size_t>(kRowBlock, points.size() - start);
    Eigen::MatrixXd stacked(r.rows() + static_cast<Eigen::Index>(len), cols);
    stacked << r, frame_block(spec, std::span(points).subspan(start, len));
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(stacked);
    const Eigen::Index keep = std::min(stacked.rows(), cols);
    r = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
  }
  if (r.rows() < cols) r.conservativeResizeLike(Eigen::MatrixXd::Zero(cols, cols));
  return r * std::sqrt(2.0 / grid_size);
}

FrameApproximator::FrameApproximator(FrameSpec spec, int m, double epsilon)
    : FrameApproximator(spec, m, epsilon, nullptr) {}

FrameApproximator::FrameApproximator(FrameSpec spec, int m, double epsilon,
                                     std::shared_ptr<const SvdFactors> factors)
    : spec_(spec), m_(m), epsilon_(epsilon), factors_(std::move(factors)) {
  spec_.validate();
  require(m_ >= 1, "FrameApproximator: m must be >= 1");
  require(m_ >= spec_.n, "FrameApproximator: need m >= n (got m=" + std::to_string(m_) +
                              ", n=" + std::to_string(spec_.n) + ")");
  require(epsilon_ >= 0.0 && std::isfinite(epsilon_), "FrameApproximator: epsilon must be >= 0");
  if (!factors_) factors_ = std::make_shared<const SvdFactors>(svd(assemble(spec_, m_).a));
  require(factors_->sigma.size() == spec_.n + 1, "FrameApproximator: factor size mismatch");
  for (int i = 0; i <= spec_.n; ++i)
    if (factors_->sigma[i] > epsilon_) kept_.push_back(i);
}

FrameApproximator FrameApproximator::with_epsilon(double epsilon) const {
  return FrameApproximator(spec_, m_, epsilon, factors_);
}

RegularizedFit FrameApproximator::fit(std::span<const complex> samples) const {
  require(samples.size() == static_cast<std::size_t>(m_) + 1,
          "fit: expected " + std::to_string(m_ + 1) + " samples, got " + std::to_string(samples.size()));
  const auto& f = *factors_;
  const double scale = std::sqrt(2.0 / (m_ + 1.0));
  Eigen::VectorXd re(m_ + 1), im(m_ + 1);
  for (int i = 0; i <= m_; ++i) {
    re[i] = scale * samples[i].real();
    im[i] = scale * samples[i].imag();
  }
  // Real factors applied separately to the real and imaginary parts.
  Eigen::VectorXd proj_re = f.u.transpose() * re;
  Eigen::VectorXd proj_im = f.u.transpose() * im;
  Eigen::VectorXd w_re = Eigen::VectorXd::Zero(spec_.n + 1);
  Eigen::VectorXd w_im = Eigen::VectorXd::Zero(spec_.n + 1);
  for (int i : kept_) {
    w_re[i] = proj_re[i] / f.sigma[i];
    w_im[i] = proj_im[i] / f.sigma[i];
  }
  RegularizedFit out;
  out.spec = spec_;
  out.m = m_;
  out.epsilon = epsilon_;
  out.factors = factors_;
  out.kept = kept_;
  const Eigen::VectorXd c_re = f.v * w_re;
  const Eigen::VectorXd c_im = f.v * w_im;
  out.coeffs.resize(spec_.n + 1);
  if (!c_re.allFinite() || !c_im.allFinite()) throw NumericalFailure("fit: non-finite coefficients");
  for (int i = 0; i <= spec_.n; ++i) out.coeffs[i] = complex(c_re[i], c_im[i]);
  return out;
}

RegularizedFit FrameApproximator::fit(const RealFunction& fn) const {
  const auto grid = equispaced_grid(m_);
  std::vector<complex> samples(grid.nodes.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = fn(grid.nodes[i]);
  return fit(samples);
}

double FrameApproximator::cond_l2(const Eigen::MatrixXd& factor) const {
  require(factor.rows() == spec_.n + 1 && factor.cols() == spec_.n + 1, "cond_l2: factor size mismatch");
  if (kept_.empty()) return 0.0;
  const auto& f = *factors_;
  const auto r = static_cast<Eigen::Index>(kept_.size());
  // Kept indices form a prefix because sigma is sorted.
  Eigen::MatrixXd w = f.v.leftCols(r);
  for (Eigen::Index i = 0; i < r; ++i) w.col(i) /= f.sigma[i];
  // ||E W U_r^T||_2 = ||E W||_2 = ||R W||_2 with E = Q R. Never form (RW)^T RW:
  // W carries 1/sigma and squaring it destroys the cancellation in R W.
  const Eigen::MatrixXd k = factor * w;
  check_finite(k, "cond_l2");

  std::mt19937_64 rng(kPowerSeed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(r);
  for (Eigen::Index i = 0; i < r; ++i) x[i] = normal(rng);
  x.normalize();
  double lambda = (k * x).squaredNorm();
  bool converged = false;
  for (int iter = 0; iter < kPowerIterations; ++iter) {
    Eigen::VectorXd y = k.transpose() * (k * x);
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
    const double next = (k * x).squaredNorm();
    if (std::abs(next - lambda) <= kPowerTolerance * std::abs(next)) {
      lambda = next;
      converged = true;
      break;
    }
    lambda = next;
  }
  if (!converged) {
    // Clustered top singular values: fall back to a dense SVD of the small factor.
    Eigen::JacobiSVD<Eigen::MatrixXd> dense(k);
    lambda = dense.singularValues()[0] * dense.singularValues()[0];
  }
  if (!std::isfinite(lambda)) throw NumericalFailure("cond_l2: non-finite spectral norm");
  return std::sqrt(std::max(lambda, 0.0));
}

double FrameApproximator::cond_l2(int grid_size) const {
  return cond_l2(fine_grid_factor(spec_, grid_size));
}

double FrameApproximator::cond_sup(int grid_size) const {
  if (kept_.empty()) return 0.0;
  const auto points = fine_grid(grid_size);
  const auto& f = *factors_;
  const auto r = static_cast<Eigen::Index>(kept_.size());
  Eigen::MatrixXd w = f.v.leftCols(r);
  for (Eigen::Index i = 0; i < r; ++i) w.col(i) /= f.sigma[i];
  const Eigen::MatrixXd ut = f.u.leftCols(r).transpose();

  const std::size_t blocks = (points.size() + kRowBlock - 1) / kRowBlock;
  std::vector<double> block_max(blocks, 0.0);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t start = b * kRowBlock;
    const std::size_t len = std::min<std::size_t>(kRowBlock, points.size() - start);
    const Eigen::MatrixXd k = frame_block(spec_, std::span(points).subspan(start, len)) * w;
    const Eigen::MatrixXd rows = k * ut;
    block_max[b] = rows.cwiseAbs().rowwise().sum().maxCoeff();
  });
  const double best = *std::max_element(block_max.begin(), block_max.end());
  if (!std::isfinite(best)) throw NumericalFailure("cond_sup: non-finite row sums");
  return std::sqrt(2.0 / (m_ + 1.0)) * best;
}

RegularizedFit fit(const FrameSpec& spec, int m, double epsilon, std::span<const complex> samples) {
  require(samples.size() == static_cast<std::size_t>(m) + 1,
          "fit: expected " + std::to_string(m + 1) + " samples, got " + std::to_string(samples.size()));
  return FrameApproximator(spec, m, epsilon).fit(samples);
}

complex evaluate(const RegularizedFit& fit, double x) {
  const auto row = frame_row(fit.spec, x);
  complex acc = 0.0;
  for (int i = 0; i <= fit.spec.n; ++i) acc += fit.coeffs[i] * row[i];
  return acc;
}

std::vector<complex> evaluate(const RegularizedFit& fit, std::span<const double> points) {
  std::vector<complex> out(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) out[j] = evaluate(fit, points[j]);
  return out;
}

FineGridErrors errors_on_fine_grid(const RegularizedFit& fit, const RealFunction& f, int grid_size) {
  const auto points = fine_grid(grid_size);
  FineGridErrors out;
  double sum = 0.0;
  for (double t : points) {
    const double e = std::abs(f(t) - evaluate(fit, t));
    out.error_inf = std::max(out.error_inf, e);
    sum += e * e;
  }
  out.error_l2 = std::sqrt(2.0 / grid_size * sum);
  return out;
}

ConditionNumbers condition_numbers(const FrameSpec& spec, int m, double epsilon, int fine_grid_size) {
  const FrameApproximator op(spec, m, epsilon);
  return {op.cond_l2(fine_grid_size), op.cond_sup(fine_grid_size)};
}

SingularPolynomials::SingularPolynomials(FrameSpec spec, int m)
    : spec_(spec), m_(m) {
  spec_.validate();
  require(m_ >= 1 && m_ >= spec_.n, "singular_polynomials: need m >= max(1, n)");
  factors_ = std::make_shared<const SvdFactors>(svd(assemble(spec_, m_).a));
}

Eigen::VectorXd SingularPolynomials::values(double x) const {
  const auto row = frame_row(spec_, x);
  const Eigen::Map<const Eigen::VectorXd> psi(row.data(), static_cast<Eigen::Index>(row.size()));
  return factors_->v.transpose() * psi;
}

SingularPolynomials singular_polynomials(const FrameSpec& spec, int m) { return SingularPolynomials(spec, m); }

int scaling_m_of_n(int n, double epsilon, double gamma) {
  require(gamma > 1.0, "scaling_m_of_n: gamma must be > 1");
  require(epsilon > 0.0 && epsilon <= std::exp(-1.0) * (1.0 + 1e-15),
          "scaling_m_of_n: epsilon must lie in (0, 1/e]");
  require(n >= 0, "scaling_m_of_n: n must be >= 0");
  const long double value = 36.0L * n * std::log(1.0L / epsilon) /
                            std::sqrt(static_cast<long double>(gamma) * gamma - 1.0L);
  // Absorb last-bit noise so that exact integers are not bumped up by one.
  return static_cast<int>(std::ceil(value * (1.0L - 1e-12L)));
}

double epsilon_prime(double epsilon, int n, double gamma) {
  return epsilon * (n + 1.0) / std::sqrt(gamma);
}

}  // namespace framex
