#include <gtest/gtest.h>

#include <set>

#include "hopfrad/errors.hpp"
#include "hopfrad/subspace.hpp"
#include "support.hpp"

using namespace hopfrad;

TEST(Subspace, CanonicalFormMakesEqualityStructural) {
  Field q = Field::rationals();
  Subspace a = Subspace::span(q, {{q.from_int(1), q.from_int(1)}, {q.from_int(2), q.from_int(2)}}, 2);
  Subspace b = Subspace::span(q, {{q.from_int(-3), q.from_int(-3)}}, 2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_TRUE(a.contains({q.from_int(5), q.from_int(5)}));
  EXPECT_FALSE(a.contains({q.from_int(1), q.from_int(0)}));
  EXPECT_EQ(a.non_pivots(), (std::vector<std::size_t>{1}));
}

TEST(Subspace, SumAndIntersectionDimensions) {
  std::mt19937_64 rng(3);
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    for (int t = 0; t < 40; ++t) {
      Subspace a = testkit::random_subspace(f, 5, 3, rng);
      Subspace b = testkit::random_subspace(f, 5, 3, rng);
      Subspace s = sum(a, b);
      Subspace i = intersect(a, b);
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      EXPECT_TRUE(i.is_subspace_of(a));
      EXPECT_TRUE(i.is_subspace_of(b));
      EXPECT_TRUE(a.is_subspace_of(s));
    }
  }
}

TEST(Subspace, GaussianBinomialCounts) {
  EXPECT_EQ(count_subspaces(4, 2), 67u);
  EXPECT_EQ(count_subspaces(2, 3), 6u);
  EXPECT_EQ(count_subspaces(3, 2), 16u);
  EXPECT_EQ(count_subspaces(0, 7), 1u);
}

TEST(Subspace, EnumerationMatchesCountAndIsDistinct) {
  for (auto [n, p] : {std::pair{4, 2u}, std::pair{2, 5u}, std::pair{3, 3u}}) {
    Field f = Field::prime(p);
    auto all = enumerate_subspaces(n, f);
    EXPECT_EQ(all.size(), count_subspaces(n, p));
    std::set<Subspace> uniq(all.begin(), all.end());
    EXPECT_EQ(uniq.size(), all.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Subspace, EnumerationRespectsCap) {
  EnumerationLimits lim;
  lim.cap = 100;
  EXPECT_THROW(enumerate_subspaces(5, Field::prime(3), lim), CapExceeded);
  EXPECT_THROW(enumerate_subspaces(2, Field::rationals(), lim), PreconditionFailed);
  lim.cap = 10000;
  lim.subspace_cap = 10;
  EXPECT_THROW(enumerate_subspaces(4, Field::prime(2), lim), CapExceeded);
}

TEST(Subspace, VectorsAndProjectivePoints) {
  Field f = Field::prime(3);
  auto vs = enumerate_vectors(3, f);
  ASSERT_EQ(vs.size(), 27u);
  for (std::size_t i = 0; i < vs.size(); ++i) EXPECT_EQ(vector_index(vs[i]), i);
  EXPECT_EQ(enumerate_projective_points(3, f).size(), 13u);
}

TEST(Subspace, ElementsOfSubspace) {
  Field f = Field::prime(5);
  Subspace s = Subspace::span(f, {{f.from_int(1), f.from_int(2), f.from_int(0)}}, 3);
  auto els = enumerate_elements(s);
  EXPECT_EQ(els.size(), 5u);
  for (const auto& e : els) EXPECT_TRUE(s.contains(e));
}
