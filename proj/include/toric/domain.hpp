#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/cones.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

using BoundingBox = std::vector<std::pair<Rational, Rational>>;

/// A polyhedral domain W in g* = Q^n: a finite union of full-dimensional
/// rational polyhedra meeting face to face, with psi the inclusion.
///
/// Construction validates every cell (nonempty, full-dimensional) and every
/// pair of cells (their intersection is empty or a common face of both).
/// The optional bounding box is only used to truncate unbounded cells before
/// triangulation.
class PolyhedralDomain {
 public:
  PolyhedralDomain(std::size_t ambient_dim, std::vector<Polyhedron> cells,
                   std::optional<BoundingBox> bounding_box = std::nullopt);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const std::optional<BoundingBox>& bounding_box() const { return bounding_box_; }

 private:
  std::size_t ambient_dim_;
  std::vector<Polyhedron> cells_;
  std::optional<BoundingBox> bounding_box_;
};

/// A face of one cell. Faces shared by several cells are reported once,
/// under the lowest-indexed cell containing them.
struct FaceDescriptor {
  std::size_t cell = 0;
  std::vector<std::size_t> active;  // halfspaces of the cell tight on the face
  std::size_t dimension = 0;
  std::size_t codimension = 0;
  RationalVector relative_interior_point;
};

std::vector<FaceDescriptor> enumerate_strata(const PolyhedralDomain& w);

struct StratumReport {
  FaceDescriptor face;
  /// Codimension of the stratum of W through the face: n minus the dimension
  /// of the lineality space of the local cone. Equals face.codimension unless
  /// the face is interior to a union of cells.
  std::size_t codimension = 0;
  /// Inward primitive normals of W's local cone at the face.
  std::vector<LatticeVector> normals;
  /// Present when the normals are linearly independent.
  std::optional<ConeCandidate> cone;
  bool unimodular = false;
  std::string reason;
  /// Nonzero Smith elementary divisors of the normal matrix.
  std::vector<Integer> elementary_divisors;
};

/// One report per stratum; the embedding is unimodular iff every report is.
std::vector<StratumReport> check_unimodular_local_embedding(const PolyhedralDomain& w);

bool all_unimodular(std::span<const StratumReport> reports);

struct DelzantReport {
  bool delzant = false;
  std::vector<StratumReport> strata;
};

/// Delzant test for a single bounded full-dimensional polytope: every vertex
/// has exactly n facets whose normals form a Z-basis. Throws InputError if P
/// is unbounded.
DelzantReport check_delzant(const Polyhedron& p);

/// The intersection of two polyhedra, merging parallel halfspaces.
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);

}  // namespace toric
