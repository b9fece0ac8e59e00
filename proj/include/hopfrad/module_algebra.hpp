#pragma once

#include <string>
#include <vector>

#include "hopfrad/hopf.hpp"

namespace hopfrad {

/// How much of the module-algebra structure validate_action insists on.
///   weak:   1_H acts as identity and the measuring identity holds
///   module: weak plus (hh')·r = h·(h'·r)
///   unital: module plus h·1_R = ε(h)1_R (requires R to have a unit)
enum class CheckLevel { weak, module, unital };

CheckLevel parse_check_level(const std::string& s);
std::string to_string(CheckLevel level);

/// An algebra R with an action of a Hopf algebra H given by the tensor
/// e^H_h · e^R_r = action[h * dim R + r].
struct HModuleAlgebra {
  FiniteDimAlgebra algebra;
  HopfAlgebraData hopf;
  std::vector<Vector> action;

  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return algebra.dim(); }
  std::size_t hopf_dim() const { return hopf.dim(); }

  const Vector& basis_action(std::size_t h, std::size_t r) const { return action[h * dim() + r]; }
  Element act(const Element& h, const Element& r) const;
  /// Matrix of r -> h·r.
  Matrix action_matrix(const Element& h) const;
  std::vector<Element> hopf_basis() const;
};

/// Reports "hopf-unit-acts", "module", "measuring", "unital" failures by basis
/// indices, and "shape" for malformed tensors.
ValidationReport validate_action(const HModuleAlgebra& m, CheckLevel level = CheckLevel::unital);

/// span{ h·v : h in hs, v in basis(s) }.
Subspace act_image(const HModuleAlgebra& m, const std::vector<Element>& hs, const Subspace& s);
/// act_image with hs = basis of H.
Subspace h_image(const HModuleAlgebra& m, const Subspace& s);
/// H·a for a single element.
Subspace h_image(const HModuleAlgebra& m, const Element& a);

/// (I:H) = { x : h·x ∈ I for all h }. Throws PreconditionFailed unless I is
/// a two-sided ideal.
Subspace colon_ideal(const HModuleAlgebra& m, const Subspace& ideal);

/// Induced action on R/I in the canonical complement basis (see
/// quotient_algebra). Throws unless I is an H-stable ideal.
HModuleAlgebra quotient_action(const HModuleAlgebra& m, const Subspace& ideal);

/// Restriction to an H-ideal, in the basis of its RREF rows.
HModuleAlgebra restrict_action(const HModuleAlgebra& m, const Subspace& h_ideal);

/// Same algebra and Hopf data with a different action tensor.
HModuleAlgebra with_action(const HModuleAlgebra& m, std::vector<Vector> action);

/// Checks (h·a)#1 = Σ (1#h_1)(a#1)(1#S(h_2)) inside R#H for all basis pairs.
/// Failures are reported as "conjugation" with indices (h, a). Throws
/// PreconditionFailed if R lacks a unit.
ValidationReport check_conjugation_identity(const HModuleAlgebra& m);

}  // namespace hopfrad
