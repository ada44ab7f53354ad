#include "toric/lattice.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("IntegerMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionMismatch("vector " + std::to_string(i) + " has dimension " +
                              std::to_string(rows[i].size()) + ", expected " +
                              std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeVector IntegerMatrix::row(std::size_t i) const {
  return LatticeVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

LatticeVector IntegerMatrix::column(std::size_t j) const {
  LatticeVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::column_block(std::size_t first, std::size_t last) const {
  IntegerMatrix b(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) b(i, j - first) = (*this)(i, j);
  return b;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntegerMatrix::add_column_multiple(std::size_t target, std::size_t source,
                                        const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
  LatticeVector out(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RationalVector operator*(const IntegerMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product: size mismatch");
  RationalVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += Rational(a(i, j)) * v[j];
  return out;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

namespace {

// Position of the nonzero entry of smallest absolute value in a[t:, t:].
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntegerMatrix& a,
                                                                    std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = std::move(v);
      }
    }
  return best;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix left = IntegerMatrix::identity(m.rows());
  IntegerMatrix right = IntegerMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());
  std::vector<Integer> diagonal(steps, Integer(0));

  for (std::size_t t = 0; t < steps; ++t) {
    const auto first = smallest_nonzero(a, t);
    if (!first) break;
    std::pair<std::size_t, std::size_t> pivot = *first;
    for (;;) {
      a.swap_rows(t, pivot.first);
      left.swap_rows(t, pivot.first);
      a.swap_columns(t, pivot.second);
      right.swap_columns(t, pivot.second);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_column_multiple(j, t, -q);
        right.add_column_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        pivot = *smallest_nonzero(a, t);
        continue;
      }

      // The pivot must divide the whole remaining block; otherwise fold the
      // offending row into row t and reduce again with a smaller remainder.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < a.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, 1);
      left.add_row_multiple(t, *offending, 1);
      pivot = {t, t};
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
    diagonal[t] = a(t, t);
  }
  return {std::move(left), std::move(diagonal), std::move(right)};
}

HermiteDecomposition hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, j) != 0 && (!best || abs(h(i, j)) < abs(h(*best, j)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        Integer q = h(i, j) / h(r, j);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, j), h(r, j));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(u), std::move(h)};
}

std::size_t rational_rank(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols() && rank < m.rows(); ++j) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][j] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[rank][j];
      for (std::size_t k = j; k < m.cols(); ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("unimodular_inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && a[p][j] == 0) ++p;
    if (p == n) throw InputError("unimodular_inverse: matrix is singular");
    std::swap(a[p], a[j]);
    Rational inv = 1 / a[j][j];
    for (auto& x : a[j]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || a[i][j] == 0) continue;
      Rational f = a[i][j];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[j][k];
    }
  }
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (denominator(x) != 1) throw InputError("unimodular_inverse: determinant is not +-1");
      out(i, j) = numerator(x);
    }
  return out;
}

bool is_basis_of_lattice_summand(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return true;
  const IntegerMatrix m = IntegerMatrix::from_rows(vectors);
  const SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank() != vectors.size()) return false;
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(),
                     [](const Integer& d) { return d == 1; });
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = boost::multiprecision::gcd(g, abs(v));
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = gcd_of(v);
  if (g == 0) throw InputError("primitive: zero vector has no primitive representative");
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& x, const LatticeVector& u) {
  if (x.size() != u.size()) throw DimensionMismatch("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (u[i] != 0) s += x[i] * Rational(u[i]);
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace toric
