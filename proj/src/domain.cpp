#include "toric/domain.hpp"

#include <algorithm>
#include <map>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string cell_name(std::size_t i) { return "cell " + std::to_string(i); }

// Minimum of <x, u> over the face of `cell` with the given tight set; nullopt
// when unbounded below.
std::optional<Rational> minimum_over_face(const Polyhedron& cell,
                                          std::span<const std::size_t> equalities,
                                          const LatticeVector& u) {
  RationalVector objective(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) objective[i] = -Rational(u[i]);
  const LpResult r = maximize(objective, cell.constraints(equalities));
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return -r.value;
}

// The face of `a` through a relative-interior point of a ∩ b must be
// contained in b.
bool face_contained_in(const Polyhedron& a, const RationalVector& q, const Polyhedron& b) {
  const auto eq = a.tight_set(q);
  for (const auto& h : b.halfspaces()) {
    const auto m = minimum_over_face(a, eq, h.normal);
    if (!m || *m < h.offset) return false;
  }
  return true;
}

// Halfspaces of the cell that cut out a facet.
std::vector<bool> facet_defining(const Polyhedron& cell) {
  std::vector<bool> out(cell.size(), false);
  for (std::size_t j = 0; j < cell.size(); ++j) {
    const auto f = face_closure(cell, {j});
    out[j] = f && f->dimension + 1 == cell.dim() &&
             std::binary_search(f->equalities.begin(), f->equalities.end(), j);
  }
  return out;
}

// The tangent cone of a cell at p, as a polyhedron with apex 0.
Polyhedron tangent_cone(const Polyhedron& cell, const std::vector<std::size_t>& tight,
                        const std::vector<bool>& facets) {
  std::vector<Halfspace> hs;
  for (auto j : tight)
    if (facets[j]) hs.push_back({cell[j].normal, Rational(0)});
  return Polyhedron(cell.dim(), std::move(hs));
}

// Does y - delta*u lie in the cone for every small delta > 0?
bool crosses_into(const Polyhedron& cone, const RationalVector& y, const LatticeVector& u) {
  for (const auto& h : cone.halfspaces()) {
    const Rational s = dot(y, h.normal);
    if (s > 0) continue;
    if (s < 0 || dot(h.normal, u) > 0) return false;
  }
  return true;
}

// Is the cone contained in {y : <y, u> >= 0}? Checked on the cone truncated
// to the unit box, which is enough because both sides are conic.
bool cone_inside_halfspace(const Polyhedron& cone, const LatticeVector& u) {
  for (const auto& h : cone.halfspaces())
    if (h.normal == u) return true;
  auto constraints = cone.constraints();
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    RationalVector e(cone.dim(), Rational(0));
    e[i] = 1;
    constraints.push_back({e, Relation::LessEqual, Rational(1)});
    constraints.push_back({e, Relation::GreaterEqual, Rational(-1)});
  }
  RationalVector objective(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) objective[i] = -Rational(u[i]);
  const LpResult r = maximize(objective, constraints);
  return r.status == LpStatus::Optimal && r.value <= 0;
}

std::vector<Integer> nonzero_divisors(const std::vector<LatticeVector>& normals, std::size_t n) {
  std::vector<Integer> out;
  if (normals.empty()) return out;
  for (auto& d : smith_normal_form(IntegerMatrix::from_rows(normals, n)).diagonal)
    if (d != 0) out.push_back(d);
  return out;
}

std::string divisors_text(const std::vector<Integer>& ds) {
  std::string s = "(";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + ds[i].str();
  return s + ")";
}

}  // namespace

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("intersect: dimension mismatch");
  std::map<LatticeVector, Rational> merged;
  std::vector<LatticeVector> order;
  for (const auto* p : {&a, &b})
    for (const auto& h : p->halfspaces()) {
      auto [it, inserted] = merged.try_emplace(h.normal, h.offset);
      if (inserted) {
        order.push_back(h.normal);
      } else if (h.offset > it->second) {
        it->second = h.offset;
      }
    }
  std::vector<Halfspace> hs;
  for (const auto& u : order) hs.push_back({u, merged[u]});
  return Polyhedron(a.dim(), std::move(hs));
}

PolyhedralDomain::PolyhedralDomain(std::size_t ambient_dim, std::vector<Polyhedron> cells,
                                   std::optional<BoundingBox> bounding_box)
    : ambient_dim_(ambient_dim), cells_(std::move(cells)), bounding_box_(std::move(bounding_box)) {
  if (ambient_dim_ == 0) throw InputError("ambient dimension must be positive");
  if (cells_.empty()) throw InputError("domain has no cells");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].dim() != ambient_dim_) throw DimensionMismatch(cell_name(i) + " has wrong dimension");
    const auto top = face_closure(cells_[i], {});
    if (!top) throw InputError(cell_name(i) + " is empty");
    if (top->dimension != ambient_dim_) throw InputError(cell_name(i) + " is not full-dimensional");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      const auto meet = face_closure(intersect(cells_[i], cells_[j]), {});
      if (!meet) continue;
      const auto& q = meet->relative_interior_point;
      if (!face_contained_in(cells_[i], q, cells_[j]) ||
          !face_contained_in(cells_[j], q, cells_[i])) {
        throw InputError(cell_name(i) + " and " + cell_name(j) +
                         " do not meet in a common face");
      }
    }
  if (bounding_box_) {
    if (bounding_box_->size() != ambient_dim_) throw DimensionMismatch("bounding box dimension");
    for (const auto& [lo, hi] : *bounding_box_)
      if (!(lo < hi)) throw InputError("bounding box has an empty side");
  }
}

std::vector<FaceDescriptor> enumerate_strata(const PolyhedralDomain& w) {
  std::vector<FaceDescriptor> out;
  const auto& cells = w.cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (auto& face : enumerate_faces(cells[c])) {
      // A face whose relative interior meets an earlier cell is that cell's
      // face as well (cells meet face to face) and was already reported.
      const bool shared = std::any_of(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(c),
                                      [&](const Polyhedron& earlier) {
                                        return earlier.contains(face.relative_interior_point);
                                      });
      if (shared) continue;
      out.push_back({c, std::move(face.equalities), face.dimension,
                     w.ambient_dim() - face.dimension, std::move(face.relative_interior_point)});
    }
  }
  return out;
}

std::vector<StratumReport> check_unimodular_local_embedding(const PolyhedralDomain& w) {
  const auto& cells = w.cells();
  const std::size_t n = w.ambient_dim();
  std::vector<std::vector<bool>> facets;
  for (const auto& cell : cells) facets.push_back(facet_defining(cell));

  std::vector<StratumReport> reports;
  for (auto& face : enumerate_strata(w)) {
    const auto& p = face.relative_interior_point;
    struct Local {
      std::size_t cell;
      std::vector<std::size_t> tight;
      Polyhedron cone;
    };
    std::vector<Local> local;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].contains(p)) {
        auto tight = cells[c].tight_set(p);
        Polyhedron cone = tangent_cone(cells[c], tight, facets[c]);
        local.push_back({c, std::move(tight), std::move(cone)});
      }

    // A facet of one tangent cone is a boundary facet of W unless another
    // cell continues across it.
    std::vector<LatticeVector> normals;
    for (const auto& a : local) {
      for (std::size_t f = 0; f < a.cone.size(); ++f) {
        const LatticeVector& u = a.cone[f].normal;
        bool covered = false;
        if (local.size() > 1) {
          const auto facet = face_closure(a.cone, {f});
          for (const auto& b : local) {
            if (b.cell == a.cell) continue;
            if (crosses_into(b.cone, facet->relative_interior_point, u)) {
              covered = true;
              break;
            }
          }
        }
        if (!covered && std::find(normals.begin(), normals.end(), u) == normals.end())
          normals.push_back(u);
      }
    }

    StratumReport report;
    report.face = std::move(face);
    report.elementary_divisors = nonzero_divisors(normals, n);
    report.codimension =
        normals.empty() ? 0 : rational_rank(IntegerMatrix::from_rows(normals, n));

    bool convex = true;
    for (const auto& a : local)
      for (const auto& u : normals)
        if (!cone_inside_halfspace(a.cone, u)) convex = false;

    if (!convex) {
      report.reason = "local image is not a convex cone";
    } else if (normals.size() != report.codimension) {
      report.reason = "non-simple: " + std::to_string(normals.size()) +
                      " active normals at codimension " + std::to_string(report.codimension);
    } else {
      report.cone.emplace(report.face.relative_interior_point, normals);
      report.unimodular = is_unimodular(*report.cone);
      if (!report.unimodular)
        report.reason = "normals do not span a lattice summand; SNF divisors " +
                        divisors_text(report.elementary_divisors);
    }
    report.normals = std::move(normals);
    reports.push_back(std::move(report));
  }
  return reports;
}

bool all_unimodular(std::span<const StratumReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const StratumReport& r) { return r.unimodular; });
}

DelzantReport check_delzant(const Polyhedron& p) {
  if (!is_bounded(p)) throw InputError("check_delzant: polytope is unbounded");
  DelzantReport out;
  out.strata = check_unimodular_local_embedding(PolyhedralDomain(p.dim(), {p}));
  out.delzant = std::all_of(out.strata.begin(), out.strata.end(), [&](const StratumReport& r) {
    return r.face.dimension != 0 || (r.unimodular && r.normals.size() == p.dim());
  });
  return out;
}

}  // namespace toric
