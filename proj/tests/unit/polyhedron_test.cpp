#include "toric/polyhedron.hpp"

#include <gtest/gtest.h>

#include "shapes.hpp"
#include "toric/errors.hpp"

namespace toric {
namespace {

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

TEST(LinearProgram, BoundedOptimum) {
  // maximize x + y subject to x + 2y <= 4, 3x + y <= 6, x, y >= 0
  std::vector<LinearConstraint> cs = {
      {vec({1, 2}), Relation::LessEqual, 4},
      {vec({3, 1}), Relation::LessEqual, 6},
      {vec({1, 0}), Relation::GreaterEqual, 0},
      {vec({0, 1}), Relation::GreaterEqual, 0},
  };
  const auto r = maximize(vec({1, 1}), cs);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_EQ(r.point, vec({Rational(8, 5), Rational(6, 5)}));
}

TEST(LinearProgram, InfeasibleAndUnbounded) {
  std::vector<LinearConstraint> infeasible = {
      {vec({1}), Relation::GreaterEqual, 1},
      {vec({1}), Relation::LessEqual, 0},
  };
  EXPECT_EQ(maximize(vec({0}), infeasible).status, LpStatus::Infeasible);

  std::vector<LinearConstraint> ray = {{vec({1, 0}), Relation::GreaterEqual, 0}};
  EXPECT_EQ(maximize(vec({1, 0}), ray).status, LpStatus::Unbounded);
  // Variables are free: minimizing x over x >= 0 reaches 0.
  const auto r = maximize(vec({-1, 0}), ray);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 0);
}

TEST(LinearProgram, EqualitiesAndRedundantRows) {
  std::vector<LinearConstraint> cs = {
      {vec({1, 1}), Relation::Equal, 2},
      {vec({2, 2}), Relation::Equal, 4},
      {vec({1, 0}), Relation::GreaterEqual, Rational(1, 3)},
      {vec({0, 1}), Relation::GreaterEqual, 0},
  };
  const auto r = maximize(vec({0, 1}), cs);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(5, 3));
}

TEST(Polyhedron, NormalizesAndRejectsDuplicates) {
  const Polyhedron p(2, {{{2, 4}, 3}});
  EXPECT_EQ(p[0].normal, (LatticeVector{1, 2}));
  EXPECT_EQ(p[0].offset, Rational(3, 2));
  EXPECT_THROW(Polyhedron(2, {{{1, 0}, 0}, {{3, 0}, 1}}), InputError);
  EXPECT_THROW(Polyhedron(2, {{{0, 0}, 0}}), InputError);
  EXPECT_THROW(Polyhedron(2, {{{1, 0, 0}, 0}}), DimensionMismatch);
}

TEST(Faces, UnitSquare) {
  const auto faces = enumerate_faces(shapes::unit_square());
  std::array<int, 3> by_dim{};
  for (const auto& f : faces) ++by_dim[f.dimension];
  EXPECT_EQ(by_dim, (std::array<int, 3>{4, 4, 1}));
  // Vertices carry their exact coordinates.
  for (const auto& f : faces)
    if (f.dimension == 0) {
      for (const auto& x : f.relative_interior_point) EXPECT_TRUE(x == 0 || x == 1);
    }
}

TEST(Faces, RelativeInteriorPointsAreStrict) {
  const Polyhedron p = shapes::square_pyramid();
  const auto faces = enumerate_faces(p);
  EXPECT_EQ(faces.size(), 1u + 5u + 8u + 5u);
  for (const auto& f : faces) EXPECT_EQ(p.tight_set(f.relative_interior_point), f.equalities);
}

TEST(Faces, ClosureFindsImplicitEqualities) {
  // At the apex of the pyramid, forcing two opposite side facets tight
  // forces all four.
  const auto f = face_closure(shapes::square_pyramid(), {1, 2});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->equalities, (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(f->dimension, 0u);
  EXPECT_FALSE(face_closure(shapes::unit_square(), {0, 2}).has_value());
}

TEST(Faces, UnboundedHalfPlane) {
  const auto faces = enumerate_faces(shapes::half_plane());
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].dimension, 2u);
  EXPECT_EQ(faces[1].dimension, 1u);
  EXPECT_FALSE(is_bounded(shapes::half_plane()));
  EXPECT_TRUE(is_bounded(shapes::unit_square()));
}

TEST(Faces, FullDimensionality) {
  EXPECT_TRUE(is_full_dimensional(shapes::standard_simplex(4)));
  EXPECT_FALSE(is_full_dimensional(shapes::polytope(2, {{{1, 0}, 0}, {{-1, 0}, 0}})));
  EXPECT_FALSE(is_full_dimensional(shapes::polytope(1, {{{1}, 1}, {{-1}, 0}})));
}

}  // namespace
}  // namespace toric
