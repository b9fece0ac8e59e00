#pragma once

#include <string>
#include <vector>

#include "hopfrad/module_algebra.hpp"

namespace hopfrad {

/// Sparse structure constant: e_i e_j gets value · e_k.
struct Triple {
  std::size_t i, j, k;
  std::int64_t value;
};

FiniteDimAlgebra make_algebra(const Field& f, std::size_t dim, const std::vector<Triple>& mult,
                              const std::vector<std::int64_t>& unit);

/// Hopf algebra from integer data; comult entries are (i, j, k, v) meaning
/// Δ(e_i) gets v e_j ⊗ e_k, antipode[i] is S(e_i).
HopfAlgebraData make_hopf(const Field& f, std::size_t dim, const std::vector<Triple>& mult,
                          const std::vector<std::int64_t>& unit, const std::vector<Triple>& comult,
                          const std::vector<std::int64_t>& counit,
                          const std::vector<std::vector<std::int64_t>>& antipode);

/// Action entries (h, r, k, v): e^H_h · e^R_r gets v e^R_k.
std::vector<Vector> make_action(const Field& f, std::size_t hopf_dim, std::size_t dim, const std::vector<Triple>& act);

/// Group algebra of C_2, basis {1, g}.
HopfAlgebraData group_algebra_c2(const Field& f);
/// Dual of kC_2: basis {p0, p1} of orthogonal idempotents.
HopfAlgebraData dual_group_algebra_c2(const Field& f);
/// Sweedler's four-dimensional algebra, basis {1, g, y, gy}; needs char ≠ 2.
HopfAlgebraData sweedler(const Field& f);

/// E1: the trivial Hopf algebra k acting on upper-triangular 2×2 matrices,
/// basis {e11, e12, e22}.
HModuleAlgebra fixture_e1(const Field& f);
/// E2: kC_2 on k[x]/(x²), basis {1, x}, g·x = -x.
HModuleAlgebra fixture_e2(const Field& f);
/// E3: kC_2 acting trivially on M_2, basis {e11, e12, e21, e22}.
HModuleAlgebra fixture_e3(const Field& f);
/// E4: k^{C_2} on k[x]/(x²) through the grading deg x = 1.
HModuleAlgebra fixture_e4(const Field& f);
/// E5: Sweedler's algebra on k[x]/(x²) with g·x = -x, y·1 = 0, y·x = 1.
HModuleAlgebra fixture_e5(const Field& f);

struct NamedFixture {
  std::string name;
  CheckLevel level = CheckLevel::unital;
  HModuleAlgebra module;
};

/// e1..e5 over Q followed by the finite-field twins (e1-f2, e1-f5, e2-f2,
/// e2-f3, e2-f5, e3-f2, e4-f3, e4-f5, e5-f3, e5-f5), sorted by name.
std::vector<NamedFixture> builtin_fixtures();
/// Throws PreconditionFailed for unknown names.
NamedFixture builtin_fixture(const std::string& name);

/// E5 with S(y) = gy instead of -gy.
HModuleAlgebra mutate_antipode(const HModuleAlgebra& e5);
/// E5 with y·1 = 1: measuring fails at (y; 1, 1).
HModuleAlgebra mutate_measuring(const HModuleAlgebra& e5);
/// E5 with y·x = x. Measuring still holds; the module axiom breaks.
HModuleAlgebra mutate_y_fixes_x(const HModuleAlgebra& e5);

}  // namespace hopfrad
