#include "toric/cones.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {

ConeCandidate::ConeCandidate(RationalVector apex, std::vector<LatticeVector> normals)
    : apex_(std::move(apex)) {
  if (normals.size() > apex_.size()) {
    throw InputError("cone has " + std::to_string(normals.size()) + " normals in dimension " +
                     std::to_string(apex_.size()));
  }
  std::set<LatticeVector> seen;
  for (auto& v : normals) {
    if (v.size() != apex_.size()) throw DimensionMismatch("cone normal has wrong dimension");
    LatticeVector p = primitive(v);
    if (!seen.insert(p).second) throw InputError("duplicate cone normal " + to_string(p));
    normals_.push_back(std::move(p));
  }
}

bool is_unimodular(const ConeCandidate& c) { return is_basis_of_lattice_summand(c.normals()); }

bool contains(const ConeCandidate& c, const RationalVector& eta) {
  if (eta.size() != c.dim()) throw DimensionMismatch("contains: point has wrong dimension");
  RationalVector shifted(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) shifted[i] = eta[i] - c.apex()[i];
  return std::all_of(c.normals().begin(), c.normals().end(),
                     [&](const LatticeVector& v) { return dot(shifted, v) >= 0; });
}

ConeCandidate cone_at_face(const Polyhedron& polyhedron, std::span<const std::size_t> face,
                           const RationalVector& apex) {
  if (apex.size() != polyhedron.dim()) throw DimensionMismatch("cone_at_face: apex dimension");
  std::vector<std::size_t> active(face.begin(), face.end());
  std::sort(active.begin(), active.end());
  active.erase(std::unique(active.begin(), active.end()), active.end());
  for (auto i : active)
    if (i >= polyhedron.size()) throw InputError("cone_at_face: halfspace index out of range");

  const auto closure = face_closure(polyhedron, active);
  if (!closure) throw InputError("cone_at_face: the face is empty");
  if (!polyhedron.contains(apex) || polyhedron.tight_set(apex) != active) {
    throw InputError("cone_at_face: apex is not in the relative interior of the face");
  }
  std::vector<LatticeVector> normals;
  for (auto i : active) normals.push_back(polyhedron[i].normal);
  return ConeCandidate(apex, std::move(normals));
}

}  // namespace toric
