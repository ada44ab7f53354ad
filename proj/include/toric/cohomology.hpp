#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/complexes.hpp"
#include "toric/lattice.hpp"

namespace toric {

enum class CoefficientKind { Integers, Reals, IntegersPlusReals };

/// Z^n, R, or Z^n + R. The real part is handled with exact rationals.
struct Coefficients {
  CoefficientKind kind = CoefficientKind::Integers;
  std::size_t integer_rank = 1;  // n; 0 for R

  static Coefficients integers(std::size_t n = 1) { return {CoefficientKind::Integers, n}; }
  static Coefficients reals() { return {CoefficientKind::Reals, 0}; }
  static Coefficients integers_plus_reals(std::size_t n) {
    return {CoefficientKind::IntegersPlusReals, n};
  }

  bool has_reals() const { return kind != CoefficientKind::Integers; }
  /// "Z", "Z^2", "R", "Z^2+R"
  std::string tag() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// H^d(K; coefficients) as (Z^free_rank + torsion) + R^real_dim.
///
/// For Z^n the torsion list repeats each divisor of the scalar group n
/// times, so it stays a divisibility chain.
struct CohGroupPresentation {
  Coefficients coefficients;
  std::size_t degree = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::size_t real_dim = 0;

  bool is_trivial() const { return free_rank == 0 && torsion.empty() && real_dim == 0; }
  bool is_finite() const { return free_rank == 0 && real_dim == 0; }
  /// Product of the torsion divisors; only meaningful when finite.
  Integer order() const;

  friend bool operator==(const CohGroupPresentation&, const CohGroupPresentation&) = default;
};

/// Values of a d-cochain. integral[i] is the i-th Z component (one entry per
/// d-simplex, in the complex's order); real is empty unless the
/// coefficients have an R part.
struct Cochain {
  std::vector<LatticeVector> integral;
  RationalVector real;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// A cohomology class in normal form.
///
/// Free and torsion coordinates are ordered generator-major: coordinate
/// j * n + i is the j-th scalar generator in the i-th Z component.
/// Torsion coordinate t lies in [0, torsion[t]).
struct CohClass {
  std::shared_ptr<const CohGroupPresentation> presentation;
  LatticeVector free;
  LatticeVector torsion;
  RationalVector real;

  /// Presentations are compared by value.
  friend bool operator==(const CohClass& a, const CohClass& b) {
    return *a.presentation == *b.presentation && a.free == b.free && a.torsion == b.torsion &&
           a.real == b.real;
  }
};

/// Throws DimensionMismatch if a coordinate list has the wrong length.
/// Torsion coordinates are reduced into range.
CohClass make_class(std::shared_ptr<const CohGroupPresentation> p, LatticeVector free,
                    LatticeVector torsion, RationalVector real);
CohClass class_zero(std::shared_ptr<const CohGroupPresentation> p);
/// Throw GroupMismatch unless both classes share a presentation.
CohClass class_add(const CohClass& a, const CohClass& b);
CohClass class_neg(const CohClass& a);
CohClass class_sub(const CohClass& a, const CohClass& b);
bool is_zero(const CohClass& a);
std::string to_string(const CohClass& a);

/// The coboundary delta^d : C^d -> C^{d+1}, with rows indexed by
/// (d+1)-simplices and columns by d-simplices, simplices oriented by
/// ascending vertex order.
IntegerMatrix coboundary_matrix(const SimplicialComplex& k, std::size_t d);

/// H^d(K; coefficients) together with the change of basis that puts
/// cocycles into normal form.
///
/// With L D R = diag(d_1..d_r) the Smith form of delta^{d-1}, a cocycle z
/// has y = L z. Its torsion coordinates are y_i mod d_i (d_i > 1); the tail
/// y[r:] lies in the kernel of B = delta^d L^{-1}[:, r:], and with
/// L_B B R_B = diag(s) its free coordinates are (R_B^{-1} y[r:])[s:].
/// Real coordinates use the same transforms over Q.
class CohomologyGroup {
 public:
  CohomologyGroup(const SimplicialComplex& k, Coefficients coefficients, std::size_t degree);

  const CohGroupPresentation& presentation() const { return *presentation_; }
  const std::shared_ptr<const CohGroupPresentation>& presentation_ptr() const {
    return presentation_;
  }
  std::size_t cochain_length() const { return simplices_.size(); }

  CohClass zero() const { return class_zero(presentation_); }
  /// Unit vectors of every free, torsion and real coordinate.
  std::vector<CohClass> generators() const;

  /// Throws NotACocycle naming the first (d+1)-simplex where delta z != 0,
  /// DimensionMismatch if z has the wrong shape.
  CohClass cocycle_to_class(const Cochain& z) const;
  /// A cocycle whose class is c.
  Cochain representative(const CohClass& c) const;
  /// delta of a (d-1)-cochain.
  Cochain coboundary_of(const Cochain& c) const;

 private:
  void check_shape(const Cochain& c, std::size_t length) const;
  void check_cocycle(const std::vector<LatticeVector>& integral, const RationalVector& real) const;

  Coefficients coefficients_;
  std::size_t degree_;
  std::vector<Simplex> simplices_;       // d-simplices
  std::vector<Simplex> next_simplices_;  // (d+1)-simplices
  IntegerMatrix previous_;               // delta^{d-1}
  IntegerMatrix next_;                   // delta^d
  IntegerMatrix left_, left_inverse_;
  std::vector<Integer> divisors_;  // nonzero Smith divisors of delta^{d-1}
  IntegerMatrix kernel_basis_, kernel_basis_inverse_;  // R_B and its inverse
  std::size_t image_rank_ = 0;                         // r
  std::size_t tail_rank_ = 0;                          // s
  std::vector<std::size_t> torsion_rows_;              // i < r with d_i > 1
  std::shared_ptr<const CohGroupPresentation> presentation_;
};

CohGroupPresentation cohomology(const SimplicialComplex& k, Coefficients coefficients,
                                std::size_t degree);

CohClass cocycle_to_class(const SimplicialComplex& k, Coefficients coefficients,
                          std::size_t degree, const Cochain& z);

}  // namespace toric
