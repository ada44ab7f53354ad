#include "toric/polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Dense simplex tableau for: maximize cost . y, rows . y = rhs, y >= 0, rhs >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : rows_(std::move(rows)), rhs_(std::move(rhs)) {
    columns_ = rows_.empty() ? 0 : rows_.front().size();
  }

  // Phase one: artificial basis; returns false when infeasible.
  bool find_feasible_basis() {
    const std::size_t m = rows_.size();
    const std::size_t original = columns_;
    for (auto& r : rows_) r.resize(original + m, Rational(0));
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      rows_[i][original + i] = 1;
      basis_[i] = original + i;
    }
    columns_ = original + m;
    artificial_begin_ = original;

    std::vector<Rational> cost(columns_, Rational(0));
    for (std::size_t j = original; j < columns_; ++j) cost[j] = -1;
    set_objective(cost);
    run(/*allow_artificial=*/true);
    if (objective_value_ < 0) return false;

    // Pivot remaining artificials (all at level zero) out of the basis;
    // rows where that is impossible are redundant and dropped.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < artificial_begin_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < artificial_begin_ && rows_[i][j] == 0) ++j;
      if (j < artificial_begin_) {
        pivot(i, j);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  // Phase two. Returns false when unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> full(columns_, Rational(0));
    std::copy(cost.begin(), cost.end(), full.begin());
    set_objective(full);
    return run(/*allow_artificial=*/false);
  }

  const Rational& objective_value() const { return objective_value_; }

  std::vector<Rational> solution(std::size_t count) const {
    std::vector<Rational> y(count, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < count) y[basis_[i]] = rhs_[i];
    return y;
  }

 private:
  void set_objective(const std::vector<Rational>& cost) {
    // reduced[j] = c_B . column_j - c_j; optimal when all reduced >= 0.
    reduced_.assign(columns_, Rational(0));
    objective_value_ = 0;
    for (std::size_t j = 0; j < columns_; ++j) reduced_[j] = -cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns_; ++j) reduced_[j] += cb * rows_[i][j];
      objective_value_ += cb * rhs_[i];
    }
  }

  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? columns_ : artificial_begin_;
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == limit) return true;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t j = 0; j < columns_; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced_.size() == columns_ && reduced_[c] != 0) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < columns_; ++j)
        if (rows_[r][j] != 0) reduced_[j] -= f * rows_[r][j];
      objective_value_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_value_;
  std::size_t columns_ = 0;
  std::size_t artificial_begin_ = 0;
};

}  // namespace

LpResult maximize(const RationalVector& objective, std::span<const LinearConstraint> constraints) {
  const std::size_t n = objective.size();
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.coefficients.size() != n) throw DimensionMismatch("maximize: constraint dimension");
    if (c.relation != Relation::Equal) ++slacks;
  }
  // Columns: x+ (n), x- (n), slacks.
  const std::size_t width = 2 * n + slacks;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::size_t slack = 2 * n;
  for (const auto& c : constraints) {
    std::vector<Rational> row(width, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coefficients[j];
      row[n + j] = -c.coefficients[j];
    }
    if (c.relation == Relation::GreaterEqual) row[slack++] = -1;
    if (c.relation == Relation::LessEqual) row[slack++] = 1;
    Rational b = c.bound;
    if (b < 0) {
      for (auto& x : row) x = -x;
      b = -b;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  }

  LpResult result;
  if (rows.empty()) {
    // Unconstrained: optimal only for the zero objective.
    const bool zero = std::all_of(objective.begin(), objective.end(),
                                  [](const Rational& c) { return c == 0; });
    result.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
    result.point.assign(n, Rational(0));
    return result;
  }

  Tableau tableau(std::move(rows), std::move(rhs));
  if (!tableau.find_feasible_basis()) return result;
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  if (!tableau.optimize(cost)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  const auto y = tableau.solution(2 * n);
  result.status = LpStatus::Optimal;
  result.value = tableau.objective_value();
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.point[j] = y[j] - y[n + j];
  return result;
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Halfspace> halfspaces) : dim_(dim) {
  std::set<LatticeVector> seen;
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    auto& h = halfspaces[i];
    if (h.normal.size() != dim) {
      throw DimensionMismatch("halfspace " + std::to_string(i) + " has a normal of dimension " +
                              std::to_string(h.normal.size()) + ", expected " +
                              std::to_string(dim));
    }
    const Integer g = gcd_of(h.normal);
    if (g == 0) throw InputError("halfspace " + std::to_string(i) + " has a zero normal");
    for (auto& x : h.normal) x /= g;
    h.offset /= Rational(g);
    if (!seen.insert(h.normal).second) {
      throw InputError("halfspaces share the primitive normal " + to_string(h.normal));
    }
  }
  halfspaces_ = std::move(halfspaces);
}

Rational Polyhedron::slack(std::size_t i, const RationalVector& x) const {
  return dot(x, halfspaces_[i].normal) - halfspaces_[i].offset;
}

bool Polyhedron::contains(const RationalVector& x) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (slack(i, x) < 0) return false;
  return true;
}

std::vector<std::size_t> Polyhedron::tight_set(const RationalVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (slack(i, x) == 0) out.push_back(i);
  return out;
}

std::vector<LinearConstraint> Polyhedron::constraints(
    std::span<const std::size_t> equalities) const {
  std::vector<LinearConstraint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const bool eq = std::find(equalities.begin(), equalities.end(), i) != equalities.end();
    RationalVector coeffs(halfspaces_[i].normal.begin(), halfspaces_[i].normal.end());
    out.push_back({std::move(coeffs), eq ? Relation::Equal : Relation::GreaterEqual,
                   halfspaces_[i].offset});
  }
  return out;
}

std::optional<PolyhedronFace> face_closure(const Polyhedron& p,
                                           std::vector<std::size_t> equalities) {
  std::sort(equalities.begin(), equalities.end());
  equalities.erase(std::unique(equalities.begin(), equalities.end()), equalities.end());
  const auto base = p.constraints(equalities);

  const LpResult feasible = maximize(RationalVector(p.dim(), Rational(0)), base);
  if (feasible.status != LpStatus::Optimal) return std::nullopt;

  // For each remaining halfspace, push as far off its boundary as possible
  // (capped at slack 1). Zero optimum means the halfspace is tight on the
  // whole face; otherwise the maximizer is strictly inside it. The average
  // of those maximizers is strictly inside all of them at once.
  // A halfspace already slack at some witness needs no LP of its own.
  std::vector<std::size_t> closed = equalities;
  std::vector<RationalVector> witnesses{feasible.point};
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (std::binary_search(equalities.begin(), equalities.end(), j)) continue;
    if (std::any_of(witnesses.begin(), witnesses.end(),
                    [&](const RationalVector& w) { return dot(w, p[j].normal) > p[j].offset; }))
      continue;
    auto constraints = base;
    RationalVector u(p[j].normal.begin(), p[j].normal.end());
    constraints.push_back({u, Relation::LessEqual, p[j].offset + 1});
    const LpResult r = maximize(u, constraints);
    if (r.status != LpStatus::Optimal) {
      // Slack exceeds 1 on the whole face, so feasible.point already covers j.
      continue;
    } else if (r.value == p[j].offset) {
      closed.push_back(j);
    } else {
      witnesses.push_back(r.point);
    }
  }
  std::sort(closed.begin(), closed.end());

  RationalVector point(p.dim(), Rational(0));
  for (const auto& w : witnesses)
    for (std::size_t i = 0; i < p.dim(); ++i) point[i] += w[i];
  for (auto& x : point) x /= witnesses.size();

  std::vector<LatticeVector> normals;
  for (auto j : closed) normals.push_back(p[j].normal);
  const std::size_t rank =
      normals.empty() ? 0 : rational_rank(IntegerMatrix::from_rows(normals));
  return PolyhedronFace{std::move(closed), std::move(point), p.dim() - rank};
}

std::vector<PolyhedronFace> enumerate_faces(const Polyhedron& p) {
  std::vector<PolyhedronFace> faces;
  auto top = face_closure(p, {});
  if (!top) return faces;

  std::set<std::vector<std::size_t>> seen{top->equalities};
  std::deque<PolyhedronFace> queue{std::move(*top)};
  while (!queue.empty()) {
    PolyhedronFace face = std::move(queue.front());
    queue.pop_front();
    // Every proper face lies in a facet of its parent, and facets arise by
    // tightening a single extra halfspace.
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (std::binary_search(face.equalities.begin(), face.equalities.end(), j)) continue;
      auto eq = face.equalities;
      eq.push_back(j);
      auto child = face_closure(p, std::move(eq));
      if (child && seen.insert(child->equalities).second) queue.push_back(std::move(*child));
    }
    faces.push_back(std::move(face));
  }
  std::sort(faces.begin(), faces.end(), [](const PolyhedronFace& a, const PolyhedronFace& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.equalities < b.equalities;
  });
  return faces;
}

bool is_full_dimensional(const Polyhedron& p) {
  auto top = face_closure(p, {});
  return top && top->dimension == p.dim();
}

bool is_bounded(const Polyhedron& p) {
  const auto constraints = p.constraints();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (int sign : {1, -1}) {
      RationalVector objective(p.dim(), Rational(0));
      objective[i] = sign;
      if (maximize(objective, constraints).status == LpStatus::Unbounded) return false;
    }
  }
  return true;
}

}  // namespace toric
