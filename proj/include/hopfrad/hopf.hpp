#pragma once

#include <optional>
#include <vector>

#include "hopfrad/algebra.hpp"

namespace hopfrad {

/// Finite-dimensional Hopf algebra in a fixed basis {e_i}.
///
/// comult[i] has length dim^2 with Δ(e_i) = Σ_{j,k} comult[i][j*dim + k] e_j ⊗ e_k;
/// counit[i] = ε(e_i); column i of antipode is S(e_i).
struct HopfAlgebraData {
  FiniteDimAlgebra algebra;
  std::vector<Vector> comult;
  Vector counit;
  Matrix antipode;

  std::size_t dim() const { return algebra.dim(); }
  const Field& field() const { return algebra.field(); }
  Element one() const;

  /// Δ(h) as a dim^2 coordinate vector.
  Vector coproduct(const Element& h) const;
  Scalar counit_of(const Element& h) const;
  Element antipode_of(const Element& h) const;
};

/// H = k with Δ(1) = 1⊗1, ε(1) = 1, S(1) = 1.
HopfAlgebraData trivial_hopf(const Field& f);

/// Checks, on every basis element (pairs for the multiplicative axioms):
/// "unit", "coassociativity", "counit", "comult-multiplicative",
/// "comult-unit", "counit-multiplicative", "counit-unit", "antipode".
/// Shape problems are reported as "shape".
ValidationReport validate_hopf(const HopfAlgebraData& h);

/// Solution space of h t = ε(h) t for all basis h.
Subspace left_integrals(const HopfAlgebraData& h);

/// A left integral t with ε(t) = 1, or nothing when ε vanishes on all left
/// integrals (H not semisimple).
std::optional<Element> normalized_integral(const HopfAlgebraData& h);

}  // namespace hopfrad
