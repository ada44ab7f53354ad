#include "toric/cohomology.hpp"

#include <random>

#include <gtest/gtest.h>

#include "complexes_catalog.hpp"
#include "oracles.hpp"
#include "shapes.hpp"
#include "toric/errors.hpp"

namespace toric {
namespace {

std::vector<std::vector<Simplex>> by_dimension(const SimplicialComplex& k) {
  std::vector<std::vector<Simplex>> out;
  for (int d = 0; d <= k.dimension(); ++d) out.push_back(k.simplices(d));
  return out;
}

std::vector<SimplicialComplex> test_complexes() {
  return {catalog::boundary_tetrahedron(), catalog::projective_plane(), catalog::single_triangle(),
          catalog::path_graph(), abstract_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
          triangulate(shapes::single(shapes::unit_square())), triangulate(shapes::two_squares())};
}

Cochain random_cochain(std::mt19937_64& rng, Coefficients c, std::size_t length) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Cochain out;
  for (std::size_t i = 0; i < c.integer_rank; ++i) {
    LatticeVector v;
    for (std::size_t j = 0; j < length; ++j) v.push_back(entry(rng));
    out.integral.push_back(std::move(v));
  }
  if (c.has_reals())
    for (std::size_t j = 0; j < length; ++j) out.real.push_back(Rational(entry(rng), 1 + std::abs(entry(rng))));
  return out;
}

CohClass random_class(std::mt19937_64& rng, const CohomologyGroup& g) {
  std::uniform_int_distribution<int> entry(-6, 6);
  const auto& p = g.presentation();
  LatticeVector free, torsion;
  RationalVector real;
  for (std::size_t i = 0; i < p.free_rank; ++i) free.push_back(entry(rng));
  for (std::size_t i = 0; i < p.torsion.size(); ++i) torsion.push_back(entry(rng));
  for (std::size_t i = 0; i < p.real_dim; ++i) real.push_back(Rational(entry(rng), 7));
  return make_class(g.presentation_ptr(), free, torsion, real);
}

Cochain scalar(LatticeVector v) { return Cochain{{std::move(v)}, {}}; }

TEST(Cohomology, MatchesBruteForceOracle) {
  for (const auto& k : test_complexes()) {
    const auto simplices = by_dimension(k);
    for (std::size_t d = 0; d <= 3; ++d) {
      const auto expected = oracle::cohomology(simplices, d);
      const auto z = cohomology(k, Coefficients::integers(), d);
      EXPECT_EQ(z.free_rank, expected.free_rank) << "degree " << d;
      std::vector<Integer> torsion(expected.torsion.begin(), expected.torsion.end());
      EXPECT_EQ(z.torsion, torsion) << "degree " << d;
      EXPECT_EQ(cohomology(k, Coefficients::reals(), d).real_dim, expected.real_dim);
    }
  }
}

TEST(Cohomology, KnownGroups) {
  const auto sphere = cohomology(catalog::boundary_tetrahedron(), Coefficients::integers(), 2);
  EXPECT_EQ(sphere.free_rank, 1u);
  EXPECT_TRUE(sphere.torsion.empty());

  const auto rp2 = catalog::projective_plane();
  EXPECT_EQ(cohomology(rp2, Coefficients::integers(), 2).torsion, (std::vector<Integer>{2}));
  const auto rp2_z2 = cohomology(rp2, Coefficients::integers(2), 2);
  EXPECT_EQ(rp2_z2.torsion, (std::vector<Integer>{2, 2}));
  EXPECT_EQ(rp2_z2.free_rank, 0u);
  EXPECT_EQ(cohomology(rp2, Coefficients::reals(), 2).real_dim, 0u);
  EXPECT_EQ(cohomology(rp2, Coefficients::integers(), 1).free_rank, 0u);
  EXPECT_TRUE(cohomology(rp2, Coefficients::integers(), 1).torsion.empty());
}

TEST(Cohomology, ContractibleComplexesAreTrivial) {
  const auto coeff = Coefficients::integers_plus_reals(2);
  for (const auto& k : {catalog::single_triangle(), catalog::path_graph(),
                        triangulate(shapes::single(shapes::standard_triangle())),
                        triangulate(shapes::single(shapes::square_pyramid())),
                        triangulate(shapes::two_squares())}) {
    for (std::size_t d = 1; d <= 3; ++d) EXPECT_TRUE(cohomology(k, coeff, d).is_trivial());
    const auto h0 = cohomology(k, coeff, 0);
    EXPECT_EQ(h0.free_rank, 2u);
    EXPECT_EQ(h0.real_dim, 1u);
  }
}

TEST(Cohomology, CoefficientsSplit) {
  for (const auto& k : test_complexes())
    for (std::size_t d = 0; d <= 2; ++d) {
      const auto z = cohomology(k, Coefficients::integers(), d);
      const auto r = cohomology(k, Coefficients::reals(), d);
      const auto mixed = cohomology(k, Coefficients::integers_plus_reals(3), d);
      EXPECT_EQ(mixed.free_rank, 3 * z.free_rank);
      EXPECT_EQ(mixed.torsion.size(), 3 * z.torsion.size());
      EXPECT_EQ(mixed.real_dim, r.real_dim);
      // Universal coefficients: the real dimension is the free rank.
      EXPECT_EQ(r.real_dim, z.free_rank);
      for (std::size_t i = 1; i < mixed.torsion.size(); ++i)
        EXPECT_EQ(mixed.torsion[i] % mixed.torsion[i - 1], 0);
    }
}

TEST(Cohomology, NerveAgreesWithSimplicial) {
  const auto coeff = Coefficients::integers_plus_reals(2);
  for (const auto& k : test_complexes()) {
    const auto nerve = open_star_cover(k).nerve;
    for (std::size_t d = 0; d <= 2; ++d) EXPECT_EQ(cohomology(nerve, coeff, d), cohomology(k, coeff, d));
  }
}

TEST(Cohomology, CoefficientTags) {
  EXPECT_EQ(Coefficients::integers().tag(), "Z");
  EXPECT_EQ(Coefficients::integers(2).tag(), "Z^2");
  EXPECT_EQ(Coefficients::reals().tag(), "R");
  EXPECT_EQ(Coefficients::integers_plus_reals(1).tag(), "Z+R");
}

TEST(ClassArithmetic, GroupLaws) {
  auto torsion2 = std::make_shared<CohGroupPresentation>();
  torsion2->torsion = {2};
  const CohClass one = make_class(torsion2, {}, {1}, {});
  EXPECT_TRUE(is_zero(class_add(one, one)));
  EXPECT_EQ(make_class(torsion2, {}, {-3}, {}), one);

  auto free1 = std::make_shared<CohGroupPresentation>();
  free1->free_rank = 1;
  EXPECT_EQ(class_add(make_class(free1, {3}, {}, {}), make_class(free1, {-5}, {}, {})).free,
            (LatticeVector{-2}));
  const CohClass a = make_class(free1, {7}, {}, {});
  EXPECT_EQ(class_add(a, class_zero(free1)), a);
  EXPECT_TRUE(is_zero(class_add(a, class_neg(a))));

  EXPECT_THROW(class_add(one, a), GroupMismatch);
  EXPECT_THROW(make_class(free1, {1, 2}, {}, {}), DimensionMismatch);
}

TEST(ClassArithmetic, RandomGroupLaws) {
  std::mt19937_64 rng(5);
  const CohomologyGroup g(catalog::projective_plane(), Coefficients::integers_plus_reals(2), 0);
  const CohomologyGroup h(catalog::boundary_tetrahedron(), Coefficients::integers_plus_reals(2), 2);
  for (const auto* group : {&g, &h}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = random_class(rng, *group), b = random_class(rng, *group),
                 c = random_class(rng, *group);
      EXPECT_EQ(class_add(a, b), class_add(b, a));
      EXPECT_EQ(class_add(class_add(a, b), c), class_add(a, class_add(b, c)));
      EXPECT_EQ(class_sub(class_add(a, b), b), a);
    }
  }
}

TEST(CocycleToClass, CoboundariesAreZero) {
  std::mt19937_64 rng(7);
  const auto coeff = Coefficients::integers_plus_reals(2);
  for (const auto& k : test_complexes())
    for (std::size_t d = 1; d <= 2; ++d) {
      const CohomologyGroup g(k, coeff, d);
      for (int i = 0; i < 20; ++i) {
        const Cochain c = random_cochain(rng, coeff, k.simplices(d - 1).size());
        EXPECT_TRUE(is_zero(g.cocycle_to_class(g.coboundary_of(c))));
      }
    }
}

TEST(CocycleToClass, CohomologousCocyclesAgree) {
  std::mt19937_64 rng(9);
  const auto coeff = Coefficients::integers_plus_reals(2);
  for (const auto& k : test_complexes())
    for (std::size_t d = 0; d <= 2; ++d) {
      const CohomologyGroup g(k, coeff, d);
      for (int i = 0; i < 20; ++i) {
        const CohClass c = random_class(rng, g);
        Cochain z = g.representative(c);
        EXPECT_EQ(g.cocycle_to_class(z), c);
        if (d == 0) continue;
        const Cochain dc = g.coboundary_of(random_cochain(rng, coeff, k.simplices(d - 1).size()));
        for (std::size_t comp = 0; comp < z.integral.size(); ++comp)
          for (std::size_t j = 0; j < z.integral[comp].size(); ++j) z.integral[comp][j] += dc.integral[comp][j];
        for (std::size_t j = 0; j < z.real.size(); ++j) z.real[j] += dc.real[j];
        EXPECT_EQ(g.cocycle_to_class(z), c);
      }
    }
}

TEST(CocycleToClass, SphereClassIsEvaluationOnFundamentalCycle) {
  // Fundamental cycle of the boundary of [0123], on triangles 012, 013, 023, 123.
  const std::vector<int> fundamental = {-1, 1, -1, 1};
  const CohomologyGroup g(catalog::boundary_tetrahedron(), Coefficients::integers(), 2);
  const auto generator = g.cocycle_to_class(scalar({1, 0, 0, 0}));
  ASSERT_EQ(generator.free.size(), 1u);
  EXPECT_EQ(abs(generator.free[0]), 1);
  const Integer orientation = generator.free[0] * fundamental[0];

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < 50; ++i) {
    LatticeVector z;
    Integer pairing = 0;
    for (int t = 0; t < 4; ++t) {
      z.push_back(entry(rng));
      pairing += z.back() * fundamental[t];
    }
    EXPECT_EQ(g.cocycle_to_class(scalar(z)).free[0], orientation * pairing);
  }
}

TEST(CocycleToClass, ProjectivePlaneClassIsParityOfTriangles) {
  const CohomologyGroup g(catalog::projective_plane(), Coefficients::integers(), 2);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < 50; ++i) {
    LatticeVector z;
    Integer sum = 0;
    for (int t = 0; t < 10; ++t) {
      z.push_back(entry(rng));
      sum += z.back();
    }
    Integer parity = sum % 2;
    if (parity < 0) parity += 2;
    EXPECT_EQ(g.cocycle_to_class(scalar(z)).torsion, (LatticeVector{parity}));
  }
}

TEST(CocycleToClass, RejectsNonCocycles) {
  const CohomologyGroup g(catalog::boundary_tetrahedron(), Coefficients::integers(), 1);
  try {
    g.cocycle_to_class(scalar({1, 0, 0, 0, 0, 0}));
    FAIL() << "expected NotACocycle";
  } catch (const NotACocycle& e) {
    EXPECT_NE(std::string(e.what()).find("{0,1,2}"), std::string::npos) << e.what();
  }
  EXPECT_THROW(g.cocycle_to_class(scalar({1, 0})), DimensionMismatch);
  EXPECT_THROW(g.cocycle_to_class(Cochain{}), DimensionMismatch);
}

TEST(CocycleToClass, GeneratorsRoundTrip) {
  for (const auto& k : test_complexes()) {
    const CohomologyGroup g(k, Coefficients::integers_plus_reals(2), 1);
    for (const auto& c : g.generators()) EXPECT_EQ(g.cocycle_to_class(g.representative(c)), c);
  }
}

}  // namespace
}  // namespace toric
