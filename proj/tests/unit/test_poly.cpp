#include <gtest/gtest.h>

#include "hopfrad/errors.hpp"
#include "hopfrad/poly.hpp"
#include "support.hpp"

using namespace hopfrad;

namespace {

Poly ints(const Field& f, std::vector<int> c) {
  std::vector<Scalar> s;
  for (int x : c) s.push_back(f.from_int(x));
  return Poly(f, s);
}

}  // namespace

TEST(Poly, DivmodRecombines) {
  std::mt19937_64 rng(5);
  for (auto f : {Field::rationals(), Field::prime(7)}) {
    for (int t = 0; t < 30; ++t) {
      Poly a(f, testkit::random_vector(f, 6, rng));
      Poly b(f, testkit::random_vector(f, 3, rng));
      if (b.is_zero()) continue;
      auto [q, r] = poly::divmod(a, b);
      EXPECT_EQ(poly::add(poly::mul(q, b), r), a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Poly, ExtendedGcdIdentity) {
  Field f = Field::prime(5);
  Poly a = poly::mul(ints(f, {1, 1}), ints(f, {2, 0, 1}));
  Poly b = poly::mul(ints(f, {1, 1}), ints(f, {3, 1}));
  auto e = poly::ext_gcd(a, b);
  EXPECT_EQ(e.g, ints(f, {1, 1}));
  EXPECT_EQ(poly::add(poly::mul(e.s, a), poly::mul(e.t, b)), e.g);
}

TEST(Poly, FactorizationOverFp) {
  Field f = Field::prime(3);
  std::mt19937_64 rng(1);
  // x^3 - x = x (x - 1) (x - 2)
  auto fs = poly::factor_squarefree_fp(ints(f, {0, -1, 0, 1}), rng);
  ASSERT_EQ(fs.size(), 3u);
  for (const auto& p : fs) EXPECT_EQ(p.degree(), 1);
  // x^2 + 1 is irreducible mod 3, x^2 + 1 = (x+2)(x+3) mod 5
  EXPECT_EQ(poly::factor_squarefree_fp(ints(f, {1, 0, 1}), rng).size(), 1u);
  EXPECT_EQ(poly::factor_squarefree_fp(ints(Field::prime(5), {1, 0, 1}), rng).size(), 2u);
  // product of the two irreducible quadratics and a linear factor over F_2
  Field two = Field::prime(2);
  Poly prod = poly::mul(poly::mul(ints(two, {1, 1, 1}), ints(two, {1, 1, 0, 1})), ints(two, {0, 1}));
  auto f2 = poly::factor_squarefree_fp(prod, rng);
  ASSERT_EQ(f2.size(), 3u);
  Poly back = Poly::constant(two, two.one());
  for (const auto& p : f2) back = poly::mul(back, p);
  EXPECT_EQ(back, prod);
}

TEST(Poly, IrreducibilityOverRationals) {
  Field q = Field::rationals();
  std::mt19937_64 rng(1);
  EXPECT_EQ(poly::is_irreducible(ints(q, {1, 0, 1}), rng), std::optional<bool>(true));
  EXPECT_EQ(poly::is_irreducible(ints(q, {-1, 0, 1}), rng), std::optional<bool>(false));
  EXPECT_EQ(poly::is_irreducible(ints(q, {-2, 0, 0, 1}), rng), std::optional<bool>(true));
  // x^4 + 1 has no rational root; above degree 3 that is not decided.
  EXPECT_EQ(poly::is_irreducible(ints(q, {1, 0, 0, 0, 1}), rng), std::nullopt);
}

TEST(Poly, RationalRoots) {
  Field q = Field::rationals();
  // (2x - 1)(x + 3) = 2x^2 + 5x - 3
  auto roots = poly::rational_roots(ints(q, {-3, 5, 2}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], q.from_int(-3));
  EXPECT_EQ(roots[1], q.parse("1/2"));
}

TEST(Poly, MinimalPolynomialOfMatrix) {
  Field q = Field::rationals();
  Matrix m(q, 3, 3);
  m(0, 1) = q.one();  // nilpotent Jordan block of size 2 plus a zero
  EXPECT_EQ(poly::minimal_polynomial(m), Poly::monomial(q, 2));
  Matrix id = Matrix::identity(q, 3);
  EXPECT_EQ(poly::minimal_polynomial(id), Poly::linear(q, q.one()));
}

TEST(Poly, MinimalPolynomialInAlgebraAnnihilates) {
  Field f = Field::prime(5);
  HModuleAlgebra e1 = fixture_e1(f);
  const auto& a = e1.algebra;
  Element u = {f.from_int(2), f.from_int(1), f.from_int(3)};
  Poly mp = poly::minimal_polynomial(a, u, *a.unit());
  EXPECT_TRUE(vec::is_zero(poly::evaluate(a, mp, u, *a.unit())));
  EXPECT_EQ(mp.degree(), 2);
}
