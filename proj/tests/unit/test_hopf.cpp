#include <gtest/gtest.h>

#include "hopfrad/errors.hpp"
#include "support.hpp"

using namespace hopfrad;

TEST(Hopf, StandardHopfAlgebrasValidate) {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    EXPECT_TRUE(validate_hopf(trivial_hopf(f)).ok());
    EXPECT_TRUE(validate_hopf(group_algebra_c2(f)).ok());
    EXPECT_TRUE(validate_hopf(dual_group_algebra_c2(f)).ok());
    if (f.characteristic() != 2) EXPECT_TRUE(validate_hopf(sweedler(f)).ok());
  }
}

TEST(Hopf, SweedlerNeedsOddCharacteristic) {
  EXPECT_THROW(sweedler(Field::prime(2)), PreconditionFailed);
}

TEST(Hopf, CorruptedAntipodeIsNamed) {
  auto bad = mutate_antipode(fixture_e5(Field::rationals()));
  auto r = validate_hopf(bad.hopf);
  EXPECT_TRUE(r.mentions("antipode"));
  bool saw_y = false;
  for (const auto& f : r.failures) {
    if (f.axiom == "antipode" && !f.indices.empty() && f.indices[0] == 2) saw_y = true;
  }
  EXPECT_TRUE(saw_y);
}

TEST(Hopf, BrokenCounitIsNamed) {
  auto h = group_algebra_c2(Field::rationals());
  h.counit[1] = Field::rationals().from_int(2);
  auto r = validate_hopf(h);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.mentions("counit") || r.mentions("counit-multiplicative"));
}

TEST(Hopf, CoproductOfGroupLike) {
  Field q = Field::rationals();
  auto h = group_algebra_c2(q);
  Vector d = h.coproduct(h.algebra.basis_vector(1));
  // Δ(g) = g ⊗ g is index 1*2 + 1
  EXPECT_EQ(d, (Vector{q.zero(), q.zero(), q.zero(), q.one()}));
  EXPECT_EQ(h.antipode_of(h.algebra.basis_vector(1)), h.algebra.basis_vector(1));
}

TEST(Hopf, NormalizedIntegrals) {
  Field f5 = Field::prime(5);
  auto t = normalized_integral(group_algebra_c2(f5));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (Vector{f5.from_int(3), f5.from_int(3)}));
  EXPECT_FALSE(normalized_integral(group_algebra_c2(Field::prime(2))));
  EXPECT_FALSE(normalized_integral(sweedler(Field::rationals())));
  EXPECT_EQ(left_integrals(sweedler(Field::rationals())).dim(), 1u);
  auto td = normalized_integral(dual_group_algebra_c2(Field::rationals()));
  ASSERT_TRUE(td);
  EXPECT_EQ(*td, (Vector{Field::rationals().one(), Field::rationals().zero()}));
}
