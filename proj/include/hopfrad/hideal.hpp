#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfrad/module_algebra.hpp"

namespace hopfrad {

/// Answer of a predicate that is only decidable in some settings.
enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

/// Tri-state answer with its justification. `certified` is set when a yes
/// is proven (exhaustive check or algebraic certificate) rather than merely
/// not refuted. A no normally carries a witness subspace.
struct Verdict {
  Truth truth = Truth::unknown;
  bool certified = false;
  std::string method;
  std::string detail;
  std::optional<Subspace> witness;
};

/// Knobs shared by the randomized and enumerative procedures.
struct SearchOptions {
  std::uint64_t seed = 0xA1CEB;
  EnumerationLimits limits;
  std::size_t random_trials = 64;
};

/// An H-ideal is represented by its subspace; is_h_ideal is the invariant.
using HIdeal = Subspace;

struct HIdealCheck {
  bool holds = true;
  /// Human-readable description of the first violation, empty when holds.
  std::string witness;
  /// The offending element.
  std::optional<Element> value;
};

/// R S ⊆ S, S R ⊆ S and H·S ⊆ S, tested on basis elements.
HIdealCheck is_h_ideal(const HModuleAlgebra& m, const Subspace& s);

/// (E) = H·E + R(H·E) + (H·E)R + R(H·E)R. Throws Contradiction if the result
/// fails to be an H-ideal containing E.
HIdeal h_ideal_generated(const HModuleAlgebra& m, const Subspace& e);
HIdeal h_ideal_generated(const HModuleAlgebra& m, const Element& a);

Subspace ideal_product(const FiniteDimAlgebra& a, const Subspace& i, const Subspace& j);
/// I^n for n ≥ 1.
Subspace ideal_power(const FiniteDimAlgebra& a, const Subspace& i, std::size_t n);

struct Nilpotency {
  bool nilpotent = false;
  /// Least k with I^k = 0 when nilpotent.
  std::size_t index = 0;
};
/// Powers are followed for at most dim R + 1 steps or until they stabilize.
Nilpotency nilpotency_index(const FiniteDimAlgebra& a, const Subspace& i);

struct Annihilators {
  Subspace star;   ///< (H·a)I = 0 = I(H·a)
  Subspace right;  ///< I(H·a) = 0
  Subspace left;   ///< (H·a)I = 0
};
Annihilators h_annihilators(const HModuleAlgebra& m, const HIdeal& i);
/// Throws Contradiction if I* is not an H-ideal.
HIdeal h_annihilator_star(const HModuleAlgebra& m, const HIdeal& i);

/// Every two-sided ideal of R over F_p, in canonical subspace order.
std::vector<Subspace> enumerate_ideals(const FiniteDimAlgebra& a, const EnumerationLimits& limits = {});
/// Every H-ideal of R over F_p, in canonical subspace order.
std::vector<HIdeal> enumerate_h_ideals(const HModuleAlgebra& m, const EnumerationLimits& limits = {});
/// Least enumerated H-ideal containing e.
HIdeal least_h_ideal_containing(const std::vector<HIdeal>& ideals, const Subspace& e);

/// R² ≠ 0 and the only H-ideals are 0 and R.
///
/// Over F_p within the cap every nonzero vector is tried up to scalars, so the
/// answer is exact. Otherwise vectors from a deterministic sweep (basis
/// vectors, {0,±1} vectors for dim ≤ 6, seeded random vectors) are tried as
/// generators; a proper generated H-ideal refutes. A yes is certified through
/// the operator algebra 𝒜 generated by left/right multiplications and the
/// action: rad 𝒜 = 0 and a one-dimensional commutant force R to be a simple
/// 𝒜-module. A nonzero rad 𝒜, or a singular commutant element, refutes.
Verdict is_h_simple(const HModuleAlgebra& m, const SearchOptions& opts = {});

/// Candidate vectors used by the sweeps above (no duplicates up to scalars).
std::vector<Element> sweep_vectors(const Field& f, std::size_t n, const SearchOptions& opts);

/// Left multiplications, right multiplications and action matrices.
std::vector<Matrix> operator_generators(const HModuleAlgebra& m);

}  // namespace hopfrad
