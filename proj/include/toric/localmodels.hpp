#pragma once

// Numerical checks of the local differential-geometric constructions.
//
// Conventions. A 2-form is a skew matrix W with w(u, v) = u^T W v, so
// dx^dy has W(x, y) = 1 and W(y, x) = -1. The torus is R^n / Z^n acting on
// chart angles through 2 pi: a group element a in [0, 1)^n rotates by
// 2 pi a, and the generator of xi in R^n moves angles at unit speed, so
// <psi, g^{-1} dg> reads sum_i psi_i dtheta_i. Moment maps satisfy
// d<mu, xi> = -w(xi_M, .).
//
// On C^k x R^l x T^l with coordinates (x_1, y_1, ..., x_k, y_k, eta, theta)
// and mu = (|z_1|^2, ..., |z_k|^2, eta), the generator is
// xi_M = sum_j xi_j (-y_j d/dx_j + x_j d/dy_j) + sum_i xi_{k+i} d/dtheta_i.
// Then -w(xi_M, .) = c xi_j (x_j dx_j + y_j dy_j) on a C factor carrying
// c dx^dy, while d<mu, xi> = 2 xi_j (x_j dx_j + y_j dy_j), which forces the
// chart constant c = 2. The R x T factors carry deta^dtheta.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace toric::local {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kChartConstant = 2.0;
inline constexpr double kFiniteDifferenceTolerance = 1e-6;
inline constexpr double kCancellationTolerance = 1e-9;
inline constexpr double kPullbackTolerance = 1e-12;
/// Samples keep |z_j| at least this far from the corner locus z_j = 0.
inline constexpr double kCornerMargin = 0.1;

struct NumericConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  double h = 1e-4;
};

using TwoForm = std::function<Matrix(const Vector&)>;
using OneForm = std::function<Vector(const Vector&)>;
using MomentMap = std::function<Vector(const Vector&)>;
/// (point, xi) -> xi_M at the point.
using Generator = std::function<Vector(const Vector&, const Vector&)>;
/// point -> n x dim matrix whose i-th row is the 1-form A^i.
using Connection = std::function<Matrix(const Vector&)>;

/// A torus action in a chart: form, moment map and fundamental fields.
struct HamiltonianChart {
  TwoForm omega;
  MomentMap mu;
  Generator fundamental;
};

/// max over coordinate directions e_a of |d<mu, xi>(e_a) + w(xi_M, e_a)|,
/// with d mu by central differences of step h.
double convention_residual(const HamiltonianChart& chart, const Vector& x, const Vector& xi,
                           double h);

/// Central-difference exterior derivative of a 1-form: (d alpha)(a, b) =
/// d_a alpha_b - d_b alpha_a.
Matrix exterior_derivative(const OneForm& alpha, const Vector& x, double h);

/// max over a < b < c of |d_a w_bc - d_b w_ac + d_c w_ab|.
double exterior_derivative_norm(const TwoForm& w, const Vector& x, double h);

/// The model C^k x R^l x T^l.
class ToricModel {
 public:
  ToricModel(std::size_t k, std::size_t l, double chart_constant = kChartConstant);

  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  std::size_t torus_dim() const { return k_ + l_; }
  std::size_t dim() const { return 2 * (k_ + l_); }

  Vector moment(const Vector& x) const;
  Matrix form(const Vector& x) const;
  Vector fundamental(const Vector& x, const Vector& xi) const;
  /// a in R^n / Z^n acting on a point.
  Vector act(const Vector& a, const Vector& x) const;
  HamiltonianChart chart() const;
  /// Uniform point with |x|, |y|, |eta| <= 1, |z_j| >= kCornerMargin.
  Vector sample(std::mt19937_64& rng) const;

 private:
  std::size_t k_, l_;
  double chart_constant_;
};

/// Trivial bundle U x G with coordinates (p, theta) and the canonical form
/// sum_i dp_i ^ dtheta_i.
Matrix canonical_form(std::size_t n);
/// dp_i ^ dp_j, or dp_i ^ dtheta_j, on U x G.
Matrix dp_dp(std::size_t n, std::size_t i, std::size_t j);
Matrix dp_dtheta(std::size_t n, std::size_t i, std::size_t j);
/// The Maurer-Cartan connection dtheta plus a constant dp-term:
/// A^i = dtheta_i + sum_j c(i, j) dp_j. Flat for every constant c.
Connection constant_connection(const Matrix& c);
/// Uniform in U = (0, 1)^n times theta in [0, 2 pi)^n.
Vector sample_bundle_point(std::size_t n, std::mt19937_64& rng);

struct CheckResult {
  std::string name;
  double value = 0;
  double threshold = 0;
  /// Passing means value <= threshold, or value >= threshold when false.
  bool upper_bound = true;
  bool pass = false;
};

struct LocalReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  double value(const std::string& name) const;
  void add(std::string name, double value, double threshold, bool upper_bound = true);
};

/// Maximum convention residual over `samples` points of the model.
double moment_residual(const ToricModel& model, const Vector& xi, const NumericConfig& config);

/// closed, determinant, moment_convention, lagrangian_section.
LocalReport trivial_bundle_checks(std::size_t n, const NumericConfig& config);

/// Two bundles over U with forms sigma, sigma_prime, reduced along
/// mu = p - p'. Checks zero_level_is_fiber_product,
/// anti_diagonal_contraction, moment_alignment, slice_nondegenerate and
/// reduced_beta_additivity.
LocalReport tensor_reduction_check(std::size_t n, const TwoForm& sigma, const TwoForm& sigma_prime,
                                   const NumericConfig& config);

/// nu(g, z, eta, theta) = ((|z|^2, eta), g, (z, eta, theta)).
Vector star_chart(const ToricModel& model, const Vector& g, const Vector& m);
/// The representative of [p, g, m] with g = 0: (p, g . m).
Vector star_normal_form(const ToricModel& model, const Vector& g, const Vector& m);

/// fiber_product_membership, injectivity, orbit_well_defined.
LocalReport star_chart_check(std::size_t k, std::size_t l, const NumericConfig& config);

/// beta = sigma - d<p, A> at x.
Matrix recovered_beta(std::size_t n, const TwoForm& sigma, const Connection& a, const Vector& x,
                      double h);

/// beta_horizontal and beta_closed, plus beta_recovery when the expected
/// beta is given. Throws PreconditionError if sigma is not torus-invariant
/// or A is not a connection (A(xi_P) != xi) on the samples.
LocalReport form_decomposition_check(std::size_t n, const TwoForm& sigma, const Connection& a,
                                     const NumericConfig& config,
                                     const std::optional<TwoForm>& expected_beta = std::nullopt);

}  // namespace toric::local
