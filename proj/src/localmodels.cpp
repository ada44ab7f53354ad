#include "toric/localmodels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric::local {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

// Distance between two angles on the circle.
double angle_gap(double a, double b) {
  const double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

Vector uniform_vector(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = u(rng);
  return v;
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// The trivial bundle U x G: form sigma, moment p, generator d/dtheta.
HamiltonianChart bundle_chart(std::size_t n, TwoForm sigma) {
  return HamiltonianChart{
      std::move(sigma), [n](const Vector& x) -> Vector { return x.head(idx(n)); },
      [n](const Vector&, const Vector& xi) -> Vector {
        Vector v = Vector::Zero(idx(2 * n));
        v.tail(idx(n)) = xi;
        return v;
      }};
}

}  // namespace

double convention_residual(const HamiltonianChart& chart, const Vector& x, const Vector& xi,
                           double h) {
  const Vector contraction = chart.fundamental(x, xi).transpose() * chart.omega(x);
  double worst = 0;
  for (Eigen::Index a = 0; a < x.size(); ++a) {
    Vector forward = x, backward = x;
    forward[a] += h;
    backward[a] -= h;
    const double derivative = (chart.mu(forward).dot(xi) - chart.mu(backward).dot(xi)) / (2 * h);
    worst = std::max(worst, std::fabs(derivative + contraction[a]));
  }
  return worst;
}

Matrix exterior_derivative(const OneForm& alpha, const Vector& x, double h) {
  const Eigen::Index d = x.size();
  Matrix jacobian(d, d);  // jacobian(a, b) = d_a alpha_b
  for (Eigen::Index a = 0; a < d; ++a) {
    Vector forward = x, backward = x;
    forward[a] += h;
    backward[a] -= h;
    jacobian.row(a) = ((alpha(forward) - alpha(backward)) / (2 * h)).transpose();
  }
  return jacobian - jacobian.transpose();
}

double exterior_derivative_norm(const TwoForm& w, const Vector& x, double h) {
  const Eigen::Index d = x.size();
  std::vector<Matrix> partial;  // partial[a] = d_a w
  for (Eigen::Index a = 0; a < d; ++a) {
    Vector forward = x, backward = x;
    forward[a] += h;
    backward[a] -= h;
    partial.push_back((w(forward) - w(backward)) / (2 * h));
  }
  double worst = 0;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b)
      for (Eigen::Index c = b + 1; c < d; ++c)
        worst = std::max(worst, std::fabs(partial[a](b, c) - partial[b](a, c) + partial[c](a, b)));
  return worst;
}

ToricModel::ToricModel(std::size_t k, std::size_t l, double chart_constant)
    : k_(k), l_(l), chart_constant_(chart_constant) {
  if (k + l == 0) throw InputError("model needs k + l >= 1");
}

Vector ToricModel::moment(const Vector& x) const {
  Vector mu(idx(torus_dim()));
  for (std::size_t j = 0; j < k_; ++j) mu[idx(j)] = x[idx(2 * j)] * x[idx(2 * j)] + x[idx(2 * j + 1)] * x[idx(2 * j + 1)];
  for (std::size_t i = 0; i < l_; ++i) mu[idx(k_ + i)] = x[idx(2 * k_ + i)];
  return mu;
}

Matrix ToricModel::form(const Vector&) const {
  Matrix w = Matrix::Zero(idx(dim()), idx(dim()));
  for (std::size_t j = 0; j < k_; ++j) {
    w(idx(2 * j), idx(2 * j + 1)) = chart_constant_;
    w(idx(2 * j + 1), idx(2 * j)) = -chart_constant_;
  }
  for (std::size_t i = 0; i < l_; ++i) {
    const std::size_t eta = 2 * k_ + i, theta = 2 * k_ + l_ + i;
    w(idx(eta), idx(theta)) = 1;
    w(idx(theta), idx(eta)) = -1;
  }
  return w;
}

Vector ToricModel::fundamental(const Vector& x, const Vector& xi) const {
  Vector v = Vector::Zero(idx(dim()));
  for (std::size_t j = 0; j < k_; ++j) {
    v[idx(2 * j)] = -xi[idx(j)] * x[idx(2 * j + 1)];
    v[idx(2 * j + 1)] = xi[idx(j)] * x[idx(2 * j)];
  }
  for (std::size_t i = 0; i < l_; ++i) v[idx(2 * k_ + l_ + i)] = xi[idx(k_ + i)];
  return v;
}

Vector ToricModel::act(const Vector& a, const Vector& x) const {
  Vector out = x;
  for (std::size_t j = 0; j < k_; ++j) {
    const double c = std::cos(kTwoPi * a[idx(j)]), s = std::sin(kTwoPi * a[idx(j)]);
    out[idx(2 * j)] = c * x[idx(2 * j)] - s * x[idx(2 * j + 1)];
    out[idx(2 * j + 1)] = s * x[idx(2 * j)] + c * x[idx(2 * j + 1)];
  }
  for (std::size_t i = 0; i < l_; ++i) {
    const Eigen::Index theta = idx(2 * k_ + l_ + i);
    out[theta] = wrap_angle(x[theta] + kTwoPi * a[idx(k_ + i)]);
  }
  return out;
}

HamiltonianChart ToricModel::chart() const {
  return HamiltonianChart{[this](const Vector& x) { return form(x); },
                          [this](const Vector& x) { return moment(x); },
                          [this](const Vector& x, const Vector& xi) { return fundamental(x, xi); }};
}

Vector ToricModel::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit_interval(-1, 1), angle(0, kTwoPi);
  Vector x(idx(dim()));
  for (std::size_t j = 0; j < k_; ++j) {
    double a, b;
    do {
      a = unit_interval(rng);
      b = unit_interval(rng);
    } while (a * a + b * b < kCornerMargin * kCornerMargin);
    x[idx(2 * j)] = a;
    x[idx(2 * j + 1)] = b;
  }
  for (std::size_t i = 0; i < l_; ++i) x[idx(2 * k_ + i)] = unit_interval(rng);
  for (std::size_t i = 0; i < l_; ++i) x[idx(2 * k_ + l_ + i)] = angle(rng);
  return x;
}

Matrix canonical_form(std::size_t n) {
  Matrix w = Matrix::Zero(idx(2 * n), idx(2 * n));
  w.topRightCorner(idx(n), idx(n)) = Matrix::Identity(idx(n), idx(n));
  w.bottomLeftCorner(idx(n), idx(n)) = -Matrix::Identity(idx(n), idx(n));
  return w;
}

Matrix dp_dp(std::size_t n, std::size_t i, std::size_t j) {
  Matrix w = Matrix::Zero(idx(2 * n), idx(2 * n));
  w(idx(i), idx(j)) += 1;
  w(idx(j), idx(i)) -= 1;
  return w;
}

Matrix dp_dtheta(std::size_t n, std::size_t i, std::size_t j) {
  Matrix w = Matrix::Zero(idx(2 * n), idx(2 * n));
  w(idx(i), idx(n + j)) = 1;
  w(idx(n + j), idx(i)) = -1;
  return w;
}

Connection constant_connection(const Matrix& c) {
  return [c](const Vector&) -> Matrix {
    const Eigen::Index n = c.rows();
    Matrix a(n, 2 * n);
    a.leftCols(n) = c;
    a.rightCols(n) = Matrix::Identity(n, n);
    return a;
  };
}

Vector sample_bundle_point(std::size_t n, std::mt19937_64& rng) {
  Vector x(idx(2 * n));
  x.head(idx(n)) = uniform_vector(n, 0, 1, rng);
  x.tail(idx(n)) = uniform_vector(n, 0, kTwoPi, rng);
  return x;
}

bool LocalReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

double LocalReport::value(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.value;
  throw std::out_of_range("no check named " + name);
}

void LocalReport::add(std::string name, double value, double threshold, bool upper_bound) {
  const bool pass = upper_bound ? value <= threshold : value >= threshold;
  checks.push_back({std::move(name), value, threshold, upper_bound, pass});
}

double moment_residual(const ToricModel& model, const Vector& xi, const NumericConfig& config) {
  std::mt19937_64 rng(config.seed);
  const HamiltonianChart chart = model.chart();
  double worst = 0;
  for (std::size_t s = 0; s < config.samples; ++s)
    worst = std::max(worst, convention_residual(chart, model.sample(rng), xi, config.h));
  return worst;
}

LocalReport trivial_bundle_checks(std::size_t n, const NumericConfig& config) {
  std::mt19937_64 rng(config.seed);
  const Matrix omega = canonical_form(n);
  const TwoForm sigma = [omega](const Vector&) { return omega; };
  const HamiltonianChart chart = bundle_chart(n, sigma);
  Matrix section = Matrix::Zero(idx(2 * n), idx(n));  // ds for s(p) = (p, 0)
  section.topRows(idx(n)) = Matrix::Identity(idx(n), idx(n));

  double closed = 0, determinant = 0, convention = 0, lagrangian = 0;
  for (std::size_t s = 0; s < config.samples; ++s) {
    const Vector x = sample_bundle_point(n, rng);
    const Vector xi = uniform_vector(n, -1, 1, rng);
    closed = std::max(closed, exterior_derivative_norm(sigma, x, config.h));
    determinant = std::max(determinant, std::fabs(sigma(x).determinant() - 1));
    convention = std::max(convention, convention_residual(chart, x, xi, config.h));
    Vector on_section = Vector::Zero(idx(2 * n));
    on_section.head(idx(n)) = x.head(idx(n));
    lagrangian = std::max(lagrangian, (section.transpose() * sigma(on_section) * section).cwiseAbs().maxCoeff());
  }
  LocalReport r;
  r.add("closed", closed, kFiniteDifferenceTolerance);
  r.add("determinant", determinant, kCancellationTolerance);
  r.add("moment_convention", convention, kFiniteDifferenceTolerance);
  r.add("lagrangian_section", lagrangian, kPullbackTolerance);
  return r;
}

LocalReport tensor_reduction_check(std::size_t n, const TwoForm& sigma, const TwoForm& sigma_prime,
                                   const NumericConfig& config) {
  std::mt19937_64 rng(config.seed);
  const Eigen::Index m = idx(n), d = idx(2 * n);
  const Matrix canonical = canonical_form(n);
  // Product coordinates (p, theta, p', theta').
  auto total_form = [&](const Vector& x) {
    Matrix w = Matrix::Zero(2 * d, 2 * d);
    w.topLeftCorner(d, d) = sigma(x.head(d));
    w.bottomRightCorner(d, d) = sigma_prime(x.tail(d));
    return w;
  };
  // The zero level p = p' is spanned by (e, 0, e, 0), (0, e, 0, 0), (0, 0, 0, e).
  Matrix level(2 * d, 3 * m);
  level.setZero();
  for (Eigen::Index i = 0; i < m; ++i) {
    level(i, i) = level(d + i, i) = 1;
    level(m + i, m + i) = 1;
    level(d + m + i, 2 * m + i) = 1;
  }
  // Slice theta' = 0 through the zero level, parametrized by (p, theta).
  Matrix slice = Matrix::Zero(2 * d, d);
  for (Eigen::Index i = 0; i < m; ++i) {
    slice(i, i) = slice(d + i, i) = 1;
    slice(m + i, m + i) = 1;
  }

  std::size_t level_mismatches = 0;
  double contraction = 0, alignment = 0, slice_det = std::numeric_limits<double>::infinity(),
         additivity = 0;
  const HamiltonianChart first = bundle_chart(n, sigma), second = bundle_chart(n, sigma_prime);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const Vector x1 = sample_bundle_point(n, rng);
    Vector x2 = sample_bundle_point(n, rng);
    const bool on_level = s % 2 == 0;
    if (on_level) {
      x2.head(m) = x1.head(m);
    } else {
      // Push every p'_i off p_i by at least 0.01.
      for (Eigen::Index i = 0; i < m; ++i) x2[i] = x1[i] + (x2[i] < 0.5 ? -0.01 - x2[i] : x2[i] - 0.49);
    }
    Vector x(2 * d);
    x << x1, x2;
    const Vector mu = x1.head(m) - x2.head(m);
    if ((mu.cwiseAbs().maxCoeff() == 0) != on_level) ++level_mismatches;

    const Vector xi = uniform_vector(n, -1, 1, rng);
    alignment = std::max({alignment, convention_residual(first, x1, xi, config.h),
                          convention_residual(second, x2, xi, config.h)});
    if (!on_level) continue;

    const Matrix w = total_form(x);
    Vector anti = Vector::Zero(2 * d);
    anti.segment(m, m) = xi;
    anti.segment(d + m, m) = -xi;
    contraction = std::max(contraction, (anti.transpose() * w * level).cwiseAbs().maxCoeff());

    const Matrix reduced = slice.transpose() * w * slice;
    slice_det = std::min(slice_det, std::fabs(reduced.determinant()));
    Matrix expected = canonical;
    expected.topLeftCorner(m, m) += (sigma(x1) - canonical).topLeftCorner(m, m) +
                                    (sigma_prime(x2) - canonical).topLeftCorner(m, m);
    additivity = std::max(additivity, (reduced - expected).cwiseAbs().maxCoeff());
  }
  LocalReport r;
  r.add("zero_level_is_fiber_product", static_cast<double>(level_mismatches), 0);
  r.add("anti_diagonal_contraction", contraction, kCancellationTolerance);
  r.add("moment_alignment", alignment, kFiniteDifferenceTolerance);
  r.add("slice_nondegenerate", slice_det, kFiniteDifferenceTolerance, /*upper_bound=*/false);
  r.add("reduced_beta_additivity", additivity, kCancellationTolerance);
  return r;
}

Vector star_chart(const ToricModel& model, const Vector& g, const Vector& m) {
  Vector out(idx(model.torus_dim()) + g.size() + m.size());
  out << model.moment(m), g, m;
  return out;
}

Vector star_normal_form(const ToricModel& model, const Vector& g, const Vector& m) {
  Vector out(idx(model.torus_dim()) + m.size());
  out << model.moment(m), model.act(g, m);
  return out;
}

LocalReport star_chart_check(std::size_t k, std::size_t l, const NumericConfig& config) {
  const ToricModel model(k, l);
  const std::size_t n = model.torus_dim();
  std::mt19937_64 rng(config.seed);

  std::vector<Vector> inputs, outputs;
  std::size_t membership_failures = 0;
  double orbit_gap = 0;
  for (std::size_t s = 0; s < config.samples; ++s) {
    const Vector g = uniform_vector(n, 0, 1, rng);
    const Vector m = model.sample(rng);
    const Vector nu = star_chart(model, g, m);
    // Base coordinate against lambda(z) = |z|^2 and eta, compared exactly.
    for (std::size_t j = 0; j < k; ++j) {
      const double z2 = m[idx(2 * j)] * m[idx(2 * j)] + m[idx(2 * j + 1)] * m[idx(2 * j + 1)];
      if (nu[idx(j)] != z2) ++membership_failures;
    }
    for (std::size_t i = 0; i < l; ++i)
      if (nu[idx(k + i)] != m[idx(2 * k + i)]) ++membership_failures;

    // (g + a, a^{-1} m) and (g, m) name the same point of the quotient.
    const Vector a = uniform_vector(n, 0, 1, rng);
    const Vector one = star_normal_form(model, g, m);
    const Vector two = star_normal_form(model, g + a, model.act(-a, m));
    for (Eigen::Index i = 0; i < one.size(); ++i) {
      const bool angle = i >= idx(n + 2 * k + l);
      orbit_gap = std::max(orbit_gap, angle ? angle_gap(one[i], two[i]) : std::fabs(one[i] - two[i]));
    }

    Vector input(g.size() + m.size());
    input << g, m;
    inputs.push_back(std::move(input));
    outputs.push_back(nu);
  }
  std::size_t collisions = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (std::size_t j = i + 1; j < inputs.size(); ++j)
      if (outputs[i] == outputs[j] && inputs[i] != inputs[j]) ++collisions;

  LocalReport r;
  r.add("fiber_product_membership", static_cast<double>(membership_failures), 0);
  r.add("injectivity", static_cast<double>(collisions), 0);
  r.add("orbit_well_defined", orbit_gap, kCancellationTolerance);
  return r;
}

Matrix recovered_beta(std::size_t n, const TwoForm& sigma, const Connection& a, const Vector& x,
                      double h) {
  const OneForm pairing = [n, &a](const Vector& y) -> Vector {
    return a(y).transpose() * y.head(idx(n));
  };
  return sigma(x) - exterior_derivative(pairing, x, h);
}

LocalReport form_decomposition_check(std::size_t n, const TwoForm& sigma, const Connection& a,
                                     const NumericConfig& config,
                                     const std::optional<TwoForm>& expected_beta) {
  std::mt19937_64 rng(config.seed);
  const TwoForm beta = [&](const Vector& y) { return recovered_beta(n, sigma, a, y, config.h); };
  double horizontal = 0, closed = 0, recovery = 0;
  for (std::size_t s = 0; s < config.samples; ++s) {
    const Vector x = sample_bundle_point(n, rng);
    Vector moved = x;
    moved.tail(idx(n)) += kTwoPi * uniform_vector(n, 0, 1, rng);
    if ((sigma(moved) - sigma(x)).cwiseAbs().maxCoeff() > kCancellationTolerance)
      throw PreconditionError("form is not invariant under the torus action");
    const Matrix on_generators = a(x).rightCols(idx(n));
    if ((on_generators - Matrix::Identity(idx(n), idx(n))).cwiseAbs().maxCoeff() > kCancellationTolerance)
      throw PreconditionError("A does not reproduce the generators: A(xi_P) != xi");

    const Matrix b = beta(x);
    horizontal = std::max(horizontal, b.rightCols(idx(n)).cwiseAbs().maxCoeff());
    closed = std::max(closed, exterior_derivative_norm(beta, x, config.h));
    if (expected_beta) recovery = std::max(recovery, (b - (*expected_beta)(x)).cwiseAbs().maxCoeff());
  }
  LocalReport r;
  r.add("beta_horizontal", horizontal, kCancellationTolerance);
  r.add("beta_closed", closed, kFiniteDifferenceTolerance);
  if (expected_beta) r.add("beta_recovery", recovery, kCancellationTolerance);
  return r;
}

}  // namespace toric::local
