#include <gtest/gtest.h>

#include "hopfrad/errors.hpp"
#include "hopfrad/smash.hpp"
#include "hopfrad/wedderburn.hpp"
#include "support.hpp"

using namespace hopfrad;

TEST(Algebra, FixturesAreAssociativeAndUnital) {
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    EXPECT_TRUE(validate_algebra(nf.module.algebra).ok());
    auto u = find_unit(nf.module.algebra);
    ASSERT_TRUE(u);
    EXPECT_EQ(*u, *nf.module.algebra.unit());
  }
}

TEST(Algebra, BrokenAssociativityIsNamed) {
  Field q = Field::rationals();
  FiniteDimAlgebra a(q, 2);
  a.add_structure_constant(0, 0, 1, q.one());
  a.add_structure_constant(1, 0, 0, q.one());
  auto r = validate_algebra(a);
  EXPECT_TRUE(r.mentions("associativity"));
}

TEST(Algebra, WrongUnitIsReported) {
  Field q = Field::rationals();
  FiniteDimAlgebra a = fixture_e2(q).algebra;
  a.set_unit(Element{q.zero(), q.one()});
  EXPECT_FALSE(validate_algebra(a).ok());
}

TEST(Algebra, OneSidedUnits) {
  Field q = Field::rationals();
  // span{e11, e12}: e11 is a left unit only
  FiniteDimAlgebra a(q, 2);
  a.add_structure_constant(0, 0, 0, q.one());
  a.add_structure_constant(0, 1, 1, q.one());
  EXPECT_TRUE(find_left_unit(a));
  EXPECT_FALSE(find_right_unit(a));
  EXPECT_FALSE(find_unit(a));
}

TEST(Algebra, QuotientByIdeal) {
  Field q = Field::rationals();
  auto e1 = fixture_e1(q).algebra;
  Subspace j = Subspace::span(q, {e1.basis_vector(1)}, 3);
  ASSERT_TRUE(is_ideal(e1, j));
  FiniteDimAlgebra quo = quotient_algebra(e1, j);
  EXPECT_EQ(quo.dim(), 2u);
  EXPECT_TRUE(validate_algebra(quo).ok());
  EXPECT_TRUE(find_unit(quo));
  Vector v = {q.from_int(2), q.from_int(5), q.from_int(7)};
  EXPECT_EQ(project_to_quotient(j, v), (Vector{q.from_int(2), q.from_int(7)}));
  EXPECT_EQ(preimage(j, Subspace::zero(q, 2)), j);
}

TEST(Algebra, UnitizationAddsUnit) {
  Field f = Field::prime(3);
  FiniteDimAlgebra a(f, 2);
  a.add_structure_constant(0, 0, 1, f.one());
  FiniteDimAlgebra u = unitization(a);
  EXPECT_EQ(u.dim(), 3u);
  EXPECT_TRUE(validate_algebra(u).ok());
  EXPECT_EQ(find_unit(u), std::optional<Element>(u.basis_vector(0)));
}

TEST(Smash, DimensionAssociativityAndUnit) {
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    FiniteDimAlgebra s = smash_product(nf.module);
    EXPECT_EQ(s.dim(), nf.module.dim() * nf.module.hopf_dim());
    EXPECT_TRUE(validate_algebra(s).ok());
    EXPECT_TRUE(s.unit());
    EXPECT_EQ(algebra_image(nf.module).dim(), nf.module.dim());
  }
}

TEST(Smash, EmbeddingIsMultiplicative) {
  Field q = Field::rationals();
  auto m = fixture_e5(q);
  FiniteDimAlgebra s = smash_product(m);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      Element lhs = embed_algebra(m, m.algebra.basis_product(i, j));
      Element rhs = s.multiply(embed_algebra(m, m.algebra.basis_vector(i)), embed_algebra(m, m.algebra.basis_vector(j)));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Smash, RequiresUnit) {
  Field q = Field::rationals();
  auto m = fixture_e2(q);
  m.algebra.set_unit(std::nullopt);
  EXPECT_THROW(smash_product(m), PreconditionFailed);
}

TEST(Wedderburn, MatrixAlgebraIsOneBlock) {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    auto w = wedderburn(fixture_e3(f).algebra);
    EXPECT_TRUE(w.radical.is_zero());
    EXPECT_EQ(w.blocks.size(), 1u);
  }
}

TEST(Wedderburn, UpperTriangularSplitsIntoTwoBlocks) {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
    auto w = wedderburn(fixture_e1(f).algebra);
    EXPECT_EQ(w.radical.dim(), 1u);
    ASSERT_EQ(w.blocks.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(block_kernel(w, i).dim(), 2u);
  }
}

TEST(Wedderburn, GroupAlgebraOfC2) {
  // kC_2 is k × k unless char 2, where it is local
  EXPECT_EQ(wedderburn(group_algebra_c2(Field::prime(3)).algebra).blocks.size(), 2u);
  auto w2 = wedderburn(group_algebra_c2(Field::prime(2)).algebra);
  EXPECT_EQ(w2.blocks.size(), 1u);
  EXPECT_EQ(w2.radical.dim(), 1u);
}

TEST(Wedderburn, NonSplitFieldExtension) {
  // Q[x]/(x^2 + 1) is a field: one block, certified by the minimal polynomial
  Field q = Field::rationals();
  FiniteDimAlgebra a = make_algebra(q, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}}, {1, 0});
  auto w = wedderburn(a);
  EXPECT_EQ(w.blocks.size(), 1u);
  EXPECT_TRUE(w.radical.is_zero());
  // over F_5 it splits
  auto w5 = wedderburn(make_algebra(Field::prime(5), 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}}, {1, 0}));
  EXPECT_EQ(w5.blocks.size(), 2u);
}

TEST(Wedderburn, CenterOfMatrixAlgebraIsScalars) {
  EXPECT_EQ(center(fixture_e3(Field::rationals()).algebra).dim(), 1u);
  EXPECT_EQ(center(fixture_e2(Field::rationals()).algebra).dim(), 2u);
}
