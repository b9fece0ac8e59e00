#include <gtest/gtest.h>

#include "hopfrad/hideal.hpp"
#include "hopfrad/kernels.hpp"
#include "support.hpp"

using namespace hopfrad;

TEST(Kernels, AssociativityFailuresSerialMatchesParallel) {
  Field f = Field::prime(3);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    FiniteDimAlgebra a(f, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.set_basis_product(i, j, testkit::random_vector(f, 4, rng));
    EXPECT_EQ(serial::associativity_failures(a), par::associativity_failures(a));
  }
  auto ok = fixture_e3(f).algebra;
  EXPECT_TRUE(par::associativity_failures(ok).empty());
}

TEST(Kernels, FilterSubspacesKeepsOrder) {
  Field f = Field::prime(2);
  auto all = enumerate_subspaces(4, f);
  auto m = fixture_e3(f);
  auto pred = [&](const Subspace& s) { return is_h_ideal(m, s).holds; };
  auto a = serial::filter_subspaces(all, pred);
  auto b = par::filter_subspaces(all, pred);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 2u);
}

TEST(Kernels, SuccessorSets) {
  auto succ = [](std::size_t i) { return std::vector<std::uint32_t>{static_cast<std::uint32_t>((i * 7) % 13)}; };
  EXPECT_EQ(serial::successor_sets(500, succ), par::successor_sets(500, succ));
}

TEST(Kernels, FirstAnnihilatingPair) {
  Field f = Field::prime(3);
  auto m = fixture_e2(f);
  std::vector<Subspace> images;
  for (const auto& v : enumerate_projective_points(2, f)) images.push_back(h_image(m, v));
  auto s = serial::first_annihilating_pair(m.algebra, images);
  EXPECT_EQ(s, par::first_annihilating_pair(m.algebra, images));
  ASSERT_TRUE(s);
  // the first projective point is x; x R x = 0
  EXPECT_EQ(s->first, 0u);
  EXPECT_EQ(s->second, 0u);
}
