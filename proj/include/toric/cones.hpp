#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

/// The cone {eta : <eta - apex, v_i> >= 0 for all i} in g* = Q^n.
///
/// Normals are primitive, inward-pointing and pairwise distinct, and there
/// are at most n of them; the constructor enforces this. The subtorus whose
/// lattice the normals should span is implicit (their Z-span).
class ConeCandidate {
 public:
  /// Throws InputError if a normal is zero or has the wrong dimension, if two
  /// normals coincide after primitivization, or if there are more than n.
  ConeCandidate(RationalVector apex, std::vector<LatticeVector> normals);

  const RationalVector& apex() const { return apex_; }
  const std::vector<LatticeVector>& normals() const { return normals_; }
  std::size_t dim() const { return apex_.size(); }
  std::size_t k() const { return normals_.size(); }

 private:
  RationalVector apex_;
  std::vector<LatticeVector> normals_;
};

/// Normals form a basis of a direct summand of Z^n. The k = 0 cone (all of
/// g*) is unimodular.
bool is_unimodular(const ConeCandidate& c);

/// Exact membership test. Throws DimensionMismatch if eta has the wrong size.
bool contains(const ConeCandidate& c, const RationalVector& eta);

/// The local cone of `polyhedron` at the face whose tight halfspaces are
/// exactly `face`, with apex `apex` taken from that face's relative
/// interior. Throws InputError if the face is empty or `apex` is not in its
/// relative interior.
ConeCandidate cone_at_face(const Polyhedron& polyhedron, std::span<const std::size_t> face,
                           const RationalVector& apex);

}  // namespace toric
