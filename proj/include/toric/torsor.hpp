#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/complexes.hpp"
#include "toric/domain.hpp"

namespace toric {

/// Isomorphism class of a symplectic toric bundle: an element of
/// H^2(W; Z^n + R). The integer part carries the bundle's Chern datum, the
/// real part the de Rham class of its basic 2-form.
struct PicClass {
  CohClass value;
  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Isomorphism class of a symplectic toric manifold over W, recorded by its
/// offset from the base point (the class of the canonical object).
struct StmClass {
  CohClass offset;
  friend bool operator==(const StmClass&, const StmClass&) = default;
};

/// H^2(W; Z^n + R) under addition, computed as the cohomology of the nerve
/// of the open-star cover of a triangulation of W.
class PicardGroup {
 public:
  PicardGroup(std::shared_ptr<const CohomologyGroup> group, std::string provenance);

  const CohGroupPresentation& presentation() const { return group_->presentation(); }
  const CohomologyGroup& cohomology() const { return *group_; }
  const std::string& provenance() const { return provenance_; }

  /// The class of the pullback of T*G.
  PicClass neutral() const { return {group_->zero()}; }
  PicClass element(LatticeVector free, LatticeVector torsion, RationalVector real) const;
  std::vector<PicClass> generators() const;
  /// Every element, when the group is finite with at most `limit` elements.
  std::optional<std::vector<PicClass>> elements(std::size_t limit) const;

 private:
  std::shared_ptr<const CohomologyGroup> group_;
  std::string provenance_;
};

/// n is the torus dimension; InputError if n == 0.
PicardGroup picard_group(const SimplicialComplex& k, std::size_t n);
/// Triangulates first; unbounded cells need the domain's bounding box.
PicardGroup picard_group(const PolyhedralDomain& w, std::size_t n);

/// GroupMismatch if the classes come from different groups.
PicClass tensor(const PicClass& a, const PicClass& b);
StmClass act(const PicClass& p, const StmClass& m);
/// The unique p with act(p, m1) == m2.
PicClass difference(const StmClass& m2, const StmClass& m1);

class StmTorsor {
 public:
  explicit StmTorsor(PicardGroup group) : group_(std::move(group)) {}

  const PicardGroup& group() const { return group_; }
  StmClass base_point() const { return {group_.neutral().value}; }
  /// Number of classes; nullopt when infinite.
  std::optional<Integer> count() const;

 private:
  PicardGroup group_;
};

struct AxiomCheck {
  bool pass = true;
  std::size_t witnesses = 0;
  std::size_t failures = 0;

  void record(bool ok);
};

struct TorsorReport {
  CohGroupPresentation picard;
  std::optional<Integer> stm_count;
  AxiomCheck identity, compatibility, freeness, transitivity;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;

  bool all_pass() const;
  /// "exhaustive" or "sampled(<seed>)"
  std::string mode() const;
};

/// Largest finite group checked element by element.
inline constexpr std::size_t kExhaustiveLimit = 64;

/// Checks identity, compatibility with tensor, freeness and transitivity.
/// Finite groups up to kExhaustiveLimit elements are checked over all
/// pairs and triples; otherwise over the generators, their negatives and
/// `samples` classes drawn from a generator seeded with `seed`.
TorsorReport verify_torsor(const StmTorsor& t, std::uint64_t seed = 0, std::size_t samples = 1000);

}  // namespace toric
