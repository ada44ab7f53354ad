#include "toric/torsor.hpp"

#include <gtest/gtest.h>

#include "complexes_catalog.hpp"
#include "shapes.hpp"
#include "toric/errors.hpp"

namespace toric {
namespace {

TEST(PicardGroup, SmallComplexes) {
  const auto triangle = picard_group(shapes::single(shapes::standard_triangle()), 2);
  EXPECT_TRUE(triangle.presentation().is_trivial());

  const auto rp2 = picard_group(catalog::projective_plane(), 2);
  EXPECT_EQ(rp2.presentation().torsion, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(rp2.presentation().free_rank, 0u);
  EXPECT_EQ(rp2.presentation().real_dim, 0u);

  const auto sphere = picard_group(catalog::boundary_tetrahedron(), 1);
  EXPECT_EQ(sphere.presentation().free_rank, 1u);
  EXPECT_TRUE(sphere.presentation().torsion.empty());
  EXPECT_EQ(sphere.presentation().real_dim, 1u);

  EXPECT_THROW(picard_group(catalog::projective_plane(), 0), InputError);
}

TEST(PicardGroup, ContractibleDomainsHaveOneClass) {
  for (const auto& w : {shapes::single(shapes::standard_triangle()), shapes::single(shapes::unit_square()),
                        shapes::single(shapes::hirzebruch_trapezoid()), shapes::two_squares(),
                        shapes::single(shapes::square_pyramid()),
                        PolyhedralDomain(2, {shapes::half_plane()}, BoundingBox{{0, 1}, {0, 1}})}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const StmTorsor t(picard_group(w, n));
      EXPECT_TRUE(t.group().presentation().is_trivial());
      EXPECT_EQ(t.count(), std::optional<Integer>(1));
    }
  }
}

TEST(Tensor, GroupLaws) {
  const auto rp2 = picard_group(catalog::projective_plane(), 2);
  const PicClass a = rp2.element({}, {1, 0}, {});
  EXPECT_EQ(tensor(a, rp2.neutral()), a);
  EXPECT_EQ(tensor(a, a), rp2.neutral());
  const auto all = *rp2.elements(16);
  ASSERT_EQ(all.size(), 4u);
  for (const auto& p : all)
    for (const auto& q : all) EXPECT_EQ(tensor(p, q), tensor(q, p));

  const auto sphere = picard_group(catalog::boundary_tetrahedron(), 1);
  EXPECT_THROW(tensor(a, sphere.neutral()), GroupMismatch);
}

TEST(Action, TranslationFromBase) {
  const StmTorsor t(picard_group(catalog::boundary_tetrahedron(), 1));
  const PicClass p = t.group().element({1}, {}, {Rational(1, 2)});
  const StmClass m = act(p, t.base_point());
  EXPECT_EQ(m.offset.free, (LatticeVector{1}));
  EXPECT_EQ(m.offset.real, (RationalVector{Rational(1, 2)}));
  EXPECT_EQ(act(t.group().neutral(), m), m);
  EXPECT_EQ(difference(m, m), t.group().neutral());
  EXPECT_EQ(difference(m, t.base_point()), p);
}

TEST(Action, DifferencesAreUniqueInFiniteTorsor) {
  const StmTorsor t(picard_group(catalog::projective_plane(), 2));
  const auto all = *t.group().elements(16);
  std::vector<StmClass> points;
  for (const auto& p : all) points.push_back(act(p, t.base_point()));
  int pairs = 0;
  for (const auto& m1 : points)
    for (const auto& m2 : points) {
      ++pairs;
      int solutions = 0;
      for (const auto& p : all) solutions += act(p, m1) == m2;
      EXPECT_EQ(solutions, 1);
      EXPECT_EQ(act(difference(m2, m1), m1), m2);
    }
  EXPECT_EQ(pairs, 16);
}

TEST(VerifyTorsor, TrivialGroup) {
  const auto r = verify_torsor(StmTorsor(picard_group(shapes::single(shapes::standard_triangle()), 2)));
  EXPECT_TRUE(r.all_pass());
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.stm_count, std::optional<Integer>(1));
  EXPECT_EQ(r.identity.witnesses, 1u);
}

TEST(VerifyTorsor, KleinFourExhaustive) {
  const auto r = verify_torsor(StmTorsor(picard_group(catalog::projective_plane(), 2)));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.mode(), "exhaustive");
  EXPECT_EQ(r.stm_count, std::optional<Integer>(4));
  EXPECT_EQ(r.identity.witnesses, 4u);
  EXPECT_EQ(r.freeness.witnesses, 16u);
  EXPECT_EQ(r.transitivity.witnesses, 16u);
  EXPECT_EQ(r.compatibility.witnesses, 64u);
}

TEST(VerifyTorsor, InfiniteGroupIsSampledReproducibly) {
  const StmTorsor t(picard_group(catalog::boundary_tetrahedron(), 1));
  const auto r = verify_torsor(t, 0, 1000);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.mode(), "sampled(0)");
  EXPECT_FALSE(r.stm_count.has_value());
  // zero, two generators and their negatives, then the samples
  EXPECT_EQ(r.identity.witnesses, 1005u);
  const auto again = verify_torsor(t, 0, 1000);
  EXPECT_EQ(again.compatibility.witnesses, r.compatibility.witnesses);
  EXPECT_EQ(verify_torsor(t, 42, 10).mode(), "sampled(42)");
}

}  // namespace
}  // namespace toric
