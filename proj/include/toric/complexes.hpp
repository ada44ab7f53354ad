#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toric/domain.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Vertex indices in ascending order.
using Simplex = std::vector<std::size_t>;

/// A finite simplicial complex on the vertex set {0, ..., vertex_count - 1},
/// given by its maximal simplices. Vertices not covered by any listed
/// simplex are isolated points. Faces of every dimension are generated once
/// at construction and kept in lexicographic order, which fixes the
/// orientation convention (ascending vertex order) and the cochain bases.
class SimplicialComplex {
 public:
  /// Throws InputError on an empty simplex, a vertex index out of range or a
  /// repeated vertex; DimensionMismatch if coordinates are given for the
  /// wrong number of vertices or have inconsistent lengths.
  SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> maximal_simplices,
                    std::optional<std::vector<RationalVector>> coordinates = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  /// All d-simplices, lexicographically sorted; empty above the dimension.
  const std::vector<Simplex>& simplices(std::size_t d) const;
  /// Position of s in simplices(s.size() - 1), or nullopt if s is not a face.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::int64_t euler_characteristic() const;
  const std::optional<std::vector<RationalVector>>& coordinates() const { return coordinates_; }

  /// Same vertex count and the same simplices (the identity map on vertices
  /// is an isomorphism).
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.faces_ == b.faces_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Simplex> maximal_;
  std::vector<std::vector<Simplex>> faces_;
  std::optional<std::vector<RationalVector>> coordinates_;
};

/// Validated complex from raw (possibly unsorted, signed) vertex lists.
SimplicialComplex abstract_complex(std::size_t vertex_count,
                                   const std::vector<std::vector<std::int64_t>>& maximal_simplices);

/// The open-star cover of K: one element per vertex. stars[v] lists the
/// simplices (as (dimension, index) pairs) whose open cells make up st(v).
struct Cover {
  using Cell = std::pair<std::size_t, std::size_t>;
  std::vector<std::vector<Cell>> stars;
  SimplicialComplex nerve;
};

/// The nerve is built from the stars themselves: a vertex set spans a nerve
/// simplex iff the corresponding stars share an open cell. Throws InputError
/// on an empty complex.
Cover open_star_cover(const SimplicialComplex& k);

/// A stratification-compatible triangulation of W: the pulling triangulation
/// of each cell with respect to the lexicographic order of all vertices, so
/// that shared faces are triangulated identically. Vertex coordinates are
/// exact and sorted lexicographically. Unbounded cells are first cut down to
/// the bounding box; without one they raise InputError.
SimplicialComplex triangulate(const PolyhedralDomain& w);

}  // namespace toric
