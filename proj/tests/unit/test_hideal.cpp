#include <gtest/gtest.h>

#include "hopfrad/hideal.hpp"
#include "support.hpp"

using namespace hopfrad;

namespace {

Subspace x_line(const HModuleAlgebra& m) { return Subspace::span(m.field(), {m.algebra.basis_vector(1)}, 2); }

}  // namespace

TEST(HIdeal, Predicate) {
  Field q = Field::rationals();
  auto e2 = fixture_e2(q);
  EXPECT_TRUE(is_h_ideal(e2, Subspace::zero(q, 2)).holds);
  EXPECT_TRUE(is_h_ideal(e2, Subspace::full(q, 2)).holds);
  EXPECT_TRUE(is_h_ideal(e2, x_line(e2)).holds);
  auto e5 = fixture_e5(q);
  auto c = is_h_ideal(e5, x_line(e5));
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.value);
  EXPECT_EQ(*c.value, e5.algebra.basis_vector(0));
}

TEST(HIdeal, GeneratedIdeal) {
  Field q = Field::rationals();
  auto e2 = fixture_e2(q);
  EXPECT_EQ(h_ideal_generated(e2, x_line(e2)), x_line(e2));
  auto e5 = fixture_e5(q);
  EXPECT_TRUE(h_ideal_generated(e5, x_line(e5)).is_full());
  EXPECT_TRUE(h_ideal_generated(e5, e5.algebra.basis_vector(0)).is_full());
}

TEST(HIdeal, GeneratedIdealIsLeastOnE2OverF3) {
  Field f = Field::prime(3);
  auto m = fixture_e2(f);
  auto ideals = enumerate_h_ideals(m);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Subspace e = testkit::random_subspace(f, 2, 1, rng);
    EXPECT_EQ(h_ideal_generated(m, e), least_h_ideal_containing(ideals, e));
  }
}

TEST(HIdeal, ProductsPowersNilpotency) {
  Field q = Field::rationals();
  auto e2 = fixture_e2(q);
  EXPECT_EQ(nilpotency_index(e2.algebra, Subspace::zero(q, 2)).index, 1u);
  auto n = nilpotency_index(e2.algebra, x_line(e2));
  EXPECT_TRUE(n.nilpotent);
  EXPECT_EQ(n.index, 2u);
  auto e1 = fixture_e1(q);
  Subspace strict = Subspace::span(q, {e1.algebra.basis_vector(1)}, 3);
  EXPECT_EQ(nilpotency_index(e1.algebra, strict).index, 2u);
  EXPECT_FALSE(nilpotency_index(e1.algebra, Subspace::full(q, 3)).nilpotent);
  EXPECT_EQ(ideal_power(e1.algebra, Subspace::full(q, 3), 3), Subspace::full(q, 3));
}

TEST(HIdeal, Annihilators) {
  Field q = Field::rationals();
  auto e2 = fixture_e2(q);
  EXPECT_TRUE(h_annihilator_star(e2, Subspace::zero(q, 2)).is_full());
  EXPECT_EQ(h_annihilator_star(e2, x_line(e2)), x_line(e2));
  auto an = h_annihilators(e2, x_line(e2));
  EXPECT_EQ(an.left, x_line(e2));
  EXPECT_EQ(an.right, x_line(e2));
}

TEST(HIdeal, SemiprimeIdealMeetsItsAnnihilatorInZero) {
  // In M_2 with trivial C_2 action every H-ideal is H-semiprime.
  Field f = Field::prime(2);
  auto m = fixture_e3(f);
  for (const auto& i : enumerate_h_ideals(m)) {
    Annihilators an = h_annihilators(m, i);
    EXPECT_TRUE(intersect(i, an.star).is_zero());
    EXPECT_EQ(an.star, an.left);
    EXPECT_EQ(an.star, an.right);
  }
}

TEST(HIdeal, EnumerationCounts) {
  EXPECT_EQ(enumerate_h_ideals(fixture_e2(Field::prime(3))).size(), 3u);
  EXPECT_EQ(enumerate_h_ideals(fixture_e4(Field::prime(3))).size(), 3u);
  EXPECT_EQ(enumerate_h_ideals(fixture_e5(Field::prime(3))).size(), 2u);
  EXPECT_EQ(enumerate_h_ideals(fixture_e3(Field::prime(2))).size(), 2u);
  // without the action, F_3[x]/(x²) has the same three ideals
  EXPECT_EQ(enumerate_ideals(fixture_e5(Field::prime(3)).algebra).size(), 3u);
}

TEST(HIdeal, LatticeIsClosedUnderSumAndIntersection) {
  for (const auto& nf : testkit::finite_field_fixtures()) {
    SCOPED_TRACE(nf.name);
    auto ideals = enumerate_h_ideals(nf.module);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        EXPECT_NE(std::find(ideals.begin(), ideals.end(), sum(a, b)), ideals.end());
        EXPECT_NE(std::find(ideals.begin(), ideals.end(), intersect(a, b)), ideals.end());
      }
  }
}

TEST(HSimple, Examples) {
  Field q = Field::rationals();
  auto e5 = is_h_simple(fixture_e5(q));
  EXPECT_EQ(e5.truth, Truth::yes);
  EXPECT_TRUE(e5.certified);
  auto e2 = is_h_simple(fixture_e2(q));
  EXPECT_EQ(e2.truth, Truth::no);
  ASSERT_TRUE(e2.witness);
  EXPECT_EQ(*e2.witness, x_line(fixture_e2(q)));
  EXPECT_EQ(is_h_simple(fixture_e3(q)).truth, Truth::yes);
  EXPECT_EQ(is_h_simple(fixture_e5(Field::prime(3))).truth, Truth::yes);
  EXPECT_EQ(is_h_simple(fixture_e1(Field::prime(5))).truth, Truth::no);
}

TEST(HSimple, ZeroMultiplicationIsNotSimple) {
  Field q = Field::rationals();
  HModuleAlgebra m = testkit::trivially_acted(FiniteDimAlgebra(q, 1));
  EXPECT_EQ(is_h_simple(m).truth, Truth::no);
}

TEST(HSimple, SwappedSquareOfSimpleAlgebraIsHSimple) {
  // M_2 × M_2 with C_2 swapping factors has no proper H-ideal over Q.
  auto m = testkit::swap_square(fixture_e3(Field::rationals()).algebra);
  auto v = is_h_simple(m);
  EXPECT_EQ(v.truth, Truth::yes);
  EXPECT_TRUE(v.certified);
  auto f3 = testkit::swap_square(fixture_e2(Field::prime(3)).algebra);
  EXPECT_EQ(is_h_simple(f3).truth, Truth::no);
}
