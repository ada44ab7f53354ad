#include "toric/complexes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "toric/errors.hpp"

namespace toric {

namespace {

std::string simplex_text(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void add_subfaces(const Simplex& s, std::vector<std::set<Simplex>>& faces) {
  const std::size_t m = s.size();
  // Every nonempty subset; maximal simplices are small.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) f.push_back(s[i]);
    faces[f.size() - 1].insert(std::move(f));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Simplex> maximal,
                                     std::optional<std::vector<RationalVector>> coordinates)
    : vertex_count_(vertex_count), coordinates_(std::move(coordinates)) {
  std::vector<bool> used(vertex_count, false);
  for (auto& s : maximal) {
    if (s.empty()) throw InputError("simplex with no vertices");
    if (s.size() > 63) throw InputError("simplex " + simplex_text(s) + " is too large");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("simplex " + simplex_text(s) + " repeats a vertex");
    if (s.back() >= vertex_count)
      throw InputError("simplex " + simplex_text(s) + " uses a vertex outside 0.." +
                       std::to_string(vertex_count) + "-1");
    for (auto v : s) used[v] = true;
  }
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!used[v]) maximal.push_back({v});

  std::size_t top = 0;
  for (const auto& s : maximal) top = std::max(top, s.size());
  std::vector<std::set<Simplex>> faces(top);
  for (const auto& s : maximal) add_subfaces(s, faces);
  for (auto& level : faces) faces_.emplace_back(level.begin(), level.end());

  // Keep only simplices that are not proper faces of another listed one.
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  for (const auto& s : maximal) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const Simplex& t) {
      return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (!dominated) maximal_.push_back(s);
  }

  if (coordinates_) {
    if (coordinates_->size() != vertex_count)
      throw DimensionMismatch("coordinates given for " + std::to_string(coordinates_->size()) +
                              " of " + std::to_string(vertex_count) + " vertices");
    for (const auto& x : *coordinates_)
      if (x.size() != coordinates_->front().size())
        throw DimensionMismatch("vertex coordinates have inconsistent lengths");
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t d) const {
  static const std::vector<Simplex> none;
  return d < faces_.size() ? faces_[d] : none;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = simplices(s.size() - 1);
  const auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < faces_.size(); ++d)
    chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(faces_[d].size());
  return chi;
}

SimplicialComplex abstract_complex(std::size_t vertex_count,
                                   const std::vector<std::vector<std::int64_t>>& raw) {
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Simplex s;
    for (auto v : raw[i]) {
      if (v < 0 || static_cast<std::uint64_t>(v) >= vertex_count)
        throw InputError("maximal simplex " + std::to_string(i) + ": vertex " + std::to_string(v) +
                         " out of range");
      s.push_back(static_cast<std::size_t>(v));
    }
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex(vertex_count, std::move(maximal));
}

Cover open_star_cover(const SimplicialComplex& k) {
  if (k.vertex_count() == 0) throw InputError("open_star_cover: empty complex");
  Cover cover{std::vector<std::vector<Cover::Cell>>(k.vertex_count()),
              SimplicialComplex(0, {})};
  for (std::size_t d = 0; static_cast<int>(d) <= k.dimension(); ++d) {
    const auto& level = k.simplices(d);
    for (std::size_t i = 0; i < level.size(); ++i)
      for (auto v : level[i]) cover.stars[v].push_back({d, i});
  }

  // Each open cell lies in exactly the stars of the vertices of its closure;
  // those vertex sets, over all cells, are the nerve's simplices.
  std::vector<Simplex> spans;
  for (std::size_t d = 0; static_cast<int>(d) <= k.dimension(); ++d) {
    for (std::size_t i = 0; i < k.simplices(d).size(); ++i) {
      Simplex owners;
      for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (std::binary_search(cover.stars[v].begin(), cover.stars[v].end(), Cover::Cell{d, i}))
          owners.push_back(v);
      spans.push_back(std::move(owners));
    }
  }
  cover.nerve = SimplicialComplex(k.vertex_count(), std::move(spans));
  return cover;
}

namespace {

Polyhedron box_polyhedron(const BoundingBox& box) {
  std::vector<Halfspace> hs;
  const std::size_t n = box.size();
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n, Integer(0));
    e[i] = 1;
    hs.push_back({e, box[i].first});
    e[i] = -1;
    hs.push_back({e, -box[i].second});
  }
  return Polyhedron(n, std::move(hs));
}

class PullingTriangulator {
 public:
  explicit PullingTriangulator(const std::map<RationalVector, std::size_t>& index)
      : index_(index) {}

  /// Top simplices of the pulling triangulation of one cell.
  std::vector<Simplex> cell(const Polyhedron& p) {
    faces_ = enumerate_faces(p);
    vertex_sets_.clear();
    for (const auto& f : faces_) {
      Simplex verts;
      for (const auto& g : faces_)
        if (g.dimension == 0 && std::includes(g.equalities.begin(), g.equalities.end(),
                                              f.equalities.begin(), f.equalities.end()))
          verts.push_back(index_.at(g.relative_interior_point));
      std::sort(verts.begin(), verts.end());
      vertex_sets_.push_back(std::move(verts));
    }
    return face(0);
  }

 private:
  // Faces are identified across cells by their global vertex sets, which is
  // what makes shared faces come out the same.
  std::vector<Simplex> face(std::size_t f) {
    const Simplex& verts = vertex_sets_[f];
    if (auto it = memo_.find(verts); it != memo_.end()) return it->second;
    std::vector<Simplex> out;
    if (faces_[f].dimension == 0) {
      out.push_back(verts);
    } else {
      const std::size_t apex = verts.front();
      for (std::size_t g = 0; g < faces_.size(); ++g) {
        if (faces_[g].dimension + 1 != faces_[f].dimension) continue;
        const Simplex& gv = vertex_sets_[g];
        if (!std::includes(verts.begin(), verts.end(), gv.begin(), gv.end())) continue;
        if (std::binary_search(gv.begin(), gv.end(), apex)) continue;
        for (auto s : face(g)) {
          s.insert(s.begin(), apex);
          out.push_back(std::move(s));
        }
      }
    }
    std::sort(out.begin(), out.end());
    memo_.emplace(verts, out);
    return out;
  }

  const std::map<RationalVector, std::size_t>& index_;
  std::vector<PolyhedronFace> faces_;
  std::vector<Simplex> vertex_sets_;
  std::map<Simplex, std::vector<Simplex>> memo_;
};

std::string point_text(const RationalVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
  return s + ")";
}

}  // namespace

SimplicialComplex triangulate(const PolyhedralDomain& w) {
  // Truncation preserves the homotopy type and the face-to-face property
  // only if every vertex of W lies strictly inside the box.
  if (const auto& box = w.bounding_box()) {
    for (std::size_t c = 0; c < w.cells().size(); ++c)
      for (const auto& f : enumerate_faces(w.cells()[c])) {
        if (f.dimension != 0) continue;
        const auto& x = f.relative_interior_point;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (!((*box)[i].first < x[i] && x[i] < (*box)[i].second))
            throw InputError("bounding box does not strictly contain the vertex " + point_text(x) +
                             " of cell " + std::to_string(c));
      }
  }
  std::vector<Polyhedron> cells;
  for (std::size_t c = 0; c < w.cells().size(); ++c) {
    const Polyhedron& cell = w.cells()[c];
    if (is_bounded(cell)) {
      cells.push_back(cell);
    } else if (w.bounding_box()) {
      cells.push_back(intersect(cell, box_polyhedron(*w.bounding_box())));
      if (!is_full_dimensional(cells.back()))
        throw InputError("cell " + std::to_string(c) + " does not meet the bounding box in an open set");
    } else {
      throw InputError("cell " + std::to_string(c) + " is unbounded and no bounding box was given");
    }
  }

  std::map<RationalVector, std::size_t> index;
  for (const auto& cell : cells)
    for (const auto& f : enumerate_faces(cell))
      if (f.dimension == 0) index.emplace(f.relative_interior_point, 0);
  std::vector<RationalVector> coordinates;
  for (auto& [x, i] : index) {
    i = coordinates.size();
    coordinates.push_back(x);
  }

  PullingTriangulator pulling(index);
  std::vector<Simplex> top;
  for (const auto& cell : cells)
    for (auto& s : pulling.cell(cell)) top.push_back(std::move(s));
  const std::size_t count = coordinates.size();
  return SimplicialComplex(count, std::move(top), std::move(coordinates));
}

}  // namespace toric
