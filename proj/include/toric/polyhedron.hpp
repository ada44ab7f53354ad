#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Exact linear programming over Q (dense two-phase simplex, Bland's rule).
// Variables are free; the problem sizes here are a handful of constraints.

enum class Relation { GreaterEqual, Equal, LessEqual };

struct LinearConstraint {
  RationalVector coefficients;
  Relation relation;
  Rational bound;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;        // valid when Optimal
  RationalVector point;  // valid when Optimal
};

LpResult maximize(const RationalVector& objective, std::span<const LinearConstraint> constraints);

// ---------------------------------------------------------------------------
// Rational polyhedra in H-representation.

/// The closed halfspace {x : <x, normal> >= offset}. The normal is the
/// inward normal of the facet it cuts out.
struct Halfspace {
  LatticeVector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

class Polyhedron {
 public:
  Polyhedron() = default;
  /// Normals are rescaled to primitive vectors (the offset scales with them).
  /// Throws on a zero normal, a dimension mismatch, or two halfspaces with
  /// the same primitive normal.
  Polyhedron(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return halfspaces_.size(); }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const Halfspace& operator[](std::size_t i) const { return halfspaces_[i]; }

  /// <x, u_i> - c_i
  Rational slack(std::size_t i, const RationalVector& x) const;
  bool contains(const RationalVector& x) const;
  /// Indices of the halfspaces whose boundary contains x, ascending.
  std::vector<std::size_t> tight_set(const RationalVector& x) const;

  /// Constraints of P with the listed halfspaces turned into equalities.
  std::vector<LinearConstraint> constraints(std::span<const std::size_t> equalities = {}) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
};

/// A nonempty face, identified by the full set of halfspaces tight on it.
struct PolyhedronFace {
  std::vector<std::size_t> equalities;  // sorted, closed (every tight halfspace listed)
  RationalVector relative_interior_point;
  std::size_t dimension = 0;
};

/// The face cut out by forcing `equalities` tight, with its closed equality
/// set and an exact relative-interior point. nullopt when that set is empty.
std::optional<PolyhedronFace> face_closure(const Polyhedron& p,
                                           std::vector<std::size_t> equalities);

/// Every nonempty face of P (P itself included), ordered by decreasing
/// dimension and then by equality set.
std::vector<PolyhedronFace> enumerate_faces(const Polyhedron& p);

bool is_full_dimensional(const Polyhedron& p);
bool is_bounded(const Polyhedron& p);

}  // namespace toric
