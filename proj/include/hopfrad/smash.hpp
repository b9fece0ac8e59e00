#pragma once

#include "hopfrad/module_algebra.hpp"

namespace hopfrad {

/// R # H on R ⊗ H, basis index r * dim H + h, with
/// (a#h)(b#g) = Σ a(h_1·b) # h_2 g. Unit 1_R # 1_H.
/// Throws PreconditionFailed when R has no unit.
FiniteDimAlgebra smash_product(const HModuleAlgebra& m);

/// a ↦ a # 1_H
Element embed_algebra(const HModuleAlgebra& m, const Element& a);
/// h ↦ 1_R # h
Element embed_hopf(const HModuleAlgebra& m, const Element& h);
/// Subspace R # 1 of the smash product.
Subspace algebra_image(const HModuleAlgebra& m);
/// Preimage in R of a subspace of R # H under a ↦ a # 1.
Subspace pull_back_to_algebra(const HModuleAlgebra& m, const Subspace& in_smash);

}  // namespace hopfrad
