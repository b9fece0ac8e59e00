// Seeded randomized properties. Each generator draws from a fixed
// std::mt19937_64 stream, so failures reproduce exactly.
#include <gtest/gtest.h>

#include "hopfrad/kernels.hpp"
#include "hopfrad/membership.hpp"
#include "hopfrad/oracle.hpp"
#include "hopfrad/radicals.hpp"
#include "support.hpp"

using namespace hopfrad;
using namespace hopfrad::testkit;

namespace {

std::vector<FiniteDimAlgebra> random_algebras(const Field& f, std::size_t n, std::size_t max_dim, std::size_t count,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteDimAlgebra> out;
  for (int guard = 0; out.size() < count && guard < 2000; ++guard) {
    if (auto a = random_matrix_algebra(f, n, max_dim, rng)) out.push_back(*a);
  }
  return out;
}

}  // namespace

TEST(Property, RandomMatrixAlgebrasAreValid) {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (const auto& a : random_algebras(f, 3, 6, 15, 101)) {
      EXPECT_TRUE(validate_algebra(a).ok());
      EXPECT_EQ(par::associativity_failures(a), serial::associativity_failures(a));
    }
  }
}

TEST(Property, NilradicalBackendsAgreeOnRandomAlgebras) {
  for (auto [p, seed] : {std::pair{2u, 7u}, std::pair{3u, 8u}, std::pair{5u, 9u}}) {
    Field f = Field::prime(p);
    EnumerationLimits lim;
    for (const auto& a : random_algebras(f, 3, p == 2 ? 6 : (p == 3 ? 5 : 4), 20, seed)) {
      Subspace ex = nilradical_exhaustive(a, lim);
      EXPECT_EQ(nilradical_ciw(a), ex);
      if (trace_backend_applies(a)) EXPECT_EQ(nilradical_trace(a), ex);
    }
  }
}

TEST(Property, RationalNilradicalIsLargestNilpotentIdeal) {
  for (const auto& a : random_algebras(Field::rationals(), 3, 9, 20, 55)) {
    Subspace j = nilradical(a);
    EXPECT_TRUE(is_ideal(a, j));
    EXPECT_TRUE(nilpotency_index(a, j).nilpotent);
    // the quotient is semisimple: its own radical vanishes
    EXPECT_TRUE(nilradical(quotient_algebra(a, j)).is_zero());
  }
}

TEST(Property, TrivialActionCollapsesOnRandomAlgebras) {
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (const auto& a : random_algebras(f, 3, 5, 8, 303)) {
      auto m = trivially_acted(a);
      auto rep = comparison_report(m);
      for (const auto& c : rep.checks) EXPECT_NE(c.status, "fail") << c.name << ": " << c.detail;
      EXPECT_EQ(*rep.radicals.at("r_Hb").space, nilradical(a));
    }
  }
}

TEST(Property, SwappedSquaresPassReportAndOracle) {
  for (auto [p, max_dim] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    Field f = Field::prime(p);
    for (const auto& a : random_algebras(f, 2, max_dim, 6, 404 + p)) {
      auto m = swap_square(a);
      ASSERT_TRUE(validate_action(m).ok());
      auto rep = comparison_report(m);
      for (const auto& c : rep.checks) EXPECT_NE(c.status, "fail") << c.name << ": " << c.detail;
      auto orep = run_oracle(m);
      EXPECT_TRUE(orep.diffs.empty()) << orep.diffs.front();
      // the radical of A × A is rad A × rad A, which the swap preserves
      EXPECT_EQ(baer_chain(m).tau, nilradical(m.algebra));
    }
  }
}

TEST(Property, GeneratedHIdealIsAClosureOperator) {
  std::mt19937_64 rng(2024);
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    const auto& m = nf.module;
    for (int t = 0; t < 20; ++t) {
      Subspace e = random_subspace(m.field(), m.dim(), 1, rng);
      Subspace bigger = sum(e, random_subspace(m.field(), m.dim(), 1, rng));
      Subspace ge = h_ideal_generated(m, e);
      EXPECT_TRUE(e.is_subspace_of(ge));
      EXPECT_EQ(h_ideal_generated(m, ge), ge);
      EXPECT_TRUE(ge.is_subspace_of(h_ideal_generated(m, bigger)));
    }
  }
}

TEST(Property, GeneratedIdealCubeOfNestedHIdeal) {
  for (const auto& nf : finite_field_fixtures()) {
    SCOPED_TRACE(nf.name);
    const auto& m = nf.module;
    for (const auto& b : enumerate_h_ideals(m)) {
      if (b.is_zero()) continue;
      HModuleAlgebra inner = restrict_action(m, b);
      for (const auto& c_inner : enumerate_h_ideals(inner)) {
        Subspace c = lift_subspace(b, c_inner);
        Subspace gen = h_ideal_generated(m, c);
        EXPECT_TRUE(ideal_power(m.algebra, gen, 3).is_subspace_of(c));
      }
    }
  }
}

TEST(Property, MembershipNeverContradictsOnRandomVectors) {
  std::mt19937_64 rng(77);
  for (const auto& nf : builtin_fixtures()) {
    SCOPED_TRACE(nf.name);
    MembershipOptions o;
    o.tau = baer_chain(nf.module).tau;
    for (int t = 0; t < 10; ++t) {
      Element a = random_vector(nf.module.field(), nf.module.dim(), rng);
      o.seed = rng();
      MembershipResult r;
      ASSERT_NO_THROW(r = wh_membership(nf.module, a, std::nullopt, o));
      EXPECT_EQ(r.verdict == MVerdict::nilpotent, o.tau->contains(a));
    }
  }
}

TEST(Property, ProductsOfEnumeratedIdealsRespectLattice) {
  for (const auto& nf : finite_field_fixtures()) {
    const auto& m = nf.module;
    auto ideals = enumerate_h_ideals(m);
    for (const auto& i : ideals)
      for (const auto& j : ideals) {
        Subspace ij = ideal_product(m.algebra, i, j);
        EXPECT_TRUE(ij.is_subspace_of(intersect(i, j)));
        EXPECT_TRUE(is_h_ideal(m, ij).holds);
      }
  }
}
