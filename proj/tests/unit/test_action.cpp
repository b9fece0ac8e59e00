#include <gtest/gtest.h>

#include "hopfrad/errors.hpp"
#include "support.hpp"

using namespace hopfrad;

TEST(Action, BuiltinFixturesValidateAtDeclaredLevel) {
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    auto r = validate_action(nf.module, nf.level);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front().axiom);
  }
}

TEST(Action, BrokenMeasuringHasWitness) {
  auto bad = mutate_measuring(fixture_e5(Field::rationals()));
  auto r = validate_action(bad, CheckLevel::weak);
  ASSERT_TRUE(r.mentions("measuring"));
  bool witness = false;
  for (const auto& f : r.failures) {
    if (f.axiom == "measuring" && f.indices == std::vector<std::size_t>{2, 0, 0}) witness = true;
  }
  EXPECT_TRUE(witness);
}

TEST(Action, YFixingXBreaksTheModuleAxiomNotMeasuring) {
  auto bad = mutate_y_fixes_x(fixture_e5(Field::rationals()));
  EXPECT_TRUE(validate_action(bad, CheckLevel::weak).ok());
  EXPECT_TRUE(validate_action(bad, CheckLevel::module).mentions("module"));
}

TEST(Action, UnitalLevelNeedsUnitOfR) {
  auto m = fixture_e2(Field::rationals());
  m.algebra.set_unit(std::nullopt);
  EXPECT_TRUE(validate_action(m, CheckLevel::unital).mentions("unital"));
  EXPECT_TRUE(validate_action(m, CheckLevel::module).ok());
}

TEST(Action, ShapeErrors) {
  auto m = fixture_e2(Field::rationals());
  m.action.pop_back();
  EXPECT_TRUE(validate_action(m).mentions("shape"));
}

TEST(Action, CheckLevelParsing) {
  EXPECT_EQ(parse_check_level("weak"), CheckLevel::weak);
  EXPECT_EQ(to_string(CheckLevel::unital), "unital");
  EXPECT_THROW(parse_check_level("strict"), ParseError);
}

TEST(Action, ColonIdeal) {
  Field q = Field::rationals();
  auto e5 = fixture_e5(q);
  Subspace x = Subspace::span(q, {e5.algebra.basis_vector(1)}, 2);
  // span{x} is an ideal but y·x = 1 leaves it
  EXPECT_TRUE(colon_ideal(e5, x).is_zero());
  auto e2 = fixture_e2(q);
  EXPECT_EQ(colon_ideal(e2, x), x);
  Subspace not_ideal = Subspace::span(q, {e2.algebra.basis_vector(0)}, 2);
  EXPECT_THROW(colon_ideal(e2, not_ideal), PreconditionFailed);
}

TEST(Action, QuotientAndRestriction) {
  Field f = Field::prime(3);
  auto e2 = fixture_e2(f);
  Subspace x = Subspace::span(f, {e2.algebra.basis_vector(1)}, 2);
  auto quo = quotient_action(e2, x);
  EXPECT_EQ(quo.dim(), 1u);
  EXPECT_TRUE(validate_action(quo).ok());
  auto sub = restrict_action(e2, x);
  EXPECT_EQ(sub.dim(), 1u);
  EXPECT_TRUE(validate_action(sub, CheckLevel::module).ok());
  Subspace bad = Subspace::span(f, {Vector{f.one(), f.one()}}, 2);
  EXPECT_THROW(quotient_action(e2, bad), PreconditionFailed);
}

TEST(Action, ConjugationIdentityOnUnitalFixtures) {
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    EXPECT_TRUE(check_conjugation_identity(nf.module).ok());
  }
}

TEST(Action, ScaledGroupActionFailsModuleAxiom) {
  // g·x = 2x still measures, but g² = 1 acts as 4 on x
  Field q = Field::rationals();
  auto e2 = fixture_e2(q);
  auto action = e2.action;
  action[1 * 2 + 1] = Vector{q.zero(), q.from_int(2)};
  auto broken = with_action(e2, action);
  EXPECT_TRUE(validate_action(broken, CheckLevel::weak).ok());
  EXPECT_TRUE(validate_action(broken, CheckLevel::module).mentions("module"));
}

TEST(Action, ImagesUnderH) {
  Field q = Field::rationals();
  auto e5 = fixture_e5(q);
  EXPECT_TRUE(h_image(e5, e5.algebra.basis_vector(1)).is_full());
  EXPECT_EQ(h_image(e5, e5.algebra.basis_vector(0)).dim(), 1u);
  Matrix g = e5.action_matrix(e5.hopf.algebra.basis_vector(1));
  EXPECT_EQ(g(1, 1), q.from_int(-1));
}
