#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfrad/hideal.hpp"
#include "hopfrad/nilradical.hpp"

namespace hopfrad {

/// A computed radical together with how it was obtained.
struct RadicalResult {
  std::string name;
  Subspace space;
  std::string method;
  std::vector<std::string> certificates;
};

struct RadicalOptions {
  SearchOptions search;
  NilradicalOptions nil;
  /// Over F_p within the cap, recompute by enumeration where a radical
  /// promises it and throw Contradiction on mismatch.
  bool enumeration_cross_check = true;
};

/// N_0 = 0, N_{α+1} = preimage of (nil(R/N_α) : H). `chain` lists the
/// distinct terms starting with N_0; `tau` is the stable value.
struct BaerChain {
  std::vector<Subspace> chain;
  Subspace tau;
  std::vector<std::string> notes;
};
/// Throws Contradiction if the chain does not stabilize at N_1.
BaerChain baer_chain(const HModuleAlgebra& m, const NilradicalOptions& nil = {});

/// r_Hb = N_τ.
RadicalResult h_baer_radical(const HModuleAlgebra& m, const RadicalOptions& opts = {});
bool is_h_semiprime(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// Whether (H·a)R(H·b) = 0 forces a = 0 or b = 0. Exhaustive over F_p within
/// the cap; otherwise refuted by a nilpotent N_τ or zero products among swept
/// H-ideals, confirmed by a certified is_h_simple, else unknown.
Verdict is_h_prime(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// Intersection over enumerated H-ideals I for which R/I has no nonzero
/// nilpotent H-ideal. Independent of the chain; F_p only.
Subspace semiprime_intersection(const HModuleAlgebra& m, const std::vector<HIdeal>& h_ideals);

/// R ∩ the annihilators of the simple R#H-modules on which R acts nonzero,
/// read off the Wedderburn blocks of R#H / rad(R#H). Needs a unit in R.
RadicalResult h_jacobson_radical(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// rad(R#H) ∩ R, pulled back along a ↦ a#1.
Subspace smash_radical_restricted(const HModuleAlgebra& m, const NilradicalOptions& nil = {});

/// t is a left integral with ε(t) = 1.
bool is_normalized_integral(const HopfAlgebraData& h, const Element& t);

/// Image of x ↦ x + (t·a)x plus span{u(t·a)v + uv}. Throws
/// PreconditionFailed unless t is a normalized integral.
Subspace gt_subspace(const HModuleAlgebra& m, const Element& t, const Element& a);
bool gt_member(const HModuleAlgebra& m, const Element& t, const Element& a);

/// Sum of the enumerated H-ideals all of whose elements lie in their own
/// G_t set. F_p within the cap only.
RadicalResult gt_radical(const HModuleAlgebra& m, const Element& t, const RadicalOptions& opts = {});

/// Intersection of the maximal H-ideals P with R/P H-simple with unit, found
/// as the maximal members of {(M:H) : M a maximal ideal of R}; R if none.
RadicalResult h_brown_mccoy_radical(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// Classical Brown-McCoy radical: intersection of the maximal ideals of R with
/// simple unital quotient (R if there are none).
Subspace brown_mccoy_classical(const FiniteDimAlgebra& a, const RadicalOptions& opts = {});

enum class FisherBase { baer, jacobson, locnil, brownmccoy };
FisherBase parse_fisher_base(const std::string& s);
std::string to_string(FisherBase b);

/// (r(R):H) for a classical radical r.
RadicalResult fisher_radical(const HModuleAlgebra& m, FisherBase base, const RadicalOptions& opts = {});

/// (nil(R):H); in finite dimension the locally nilpotent radical is the
/// nilradical. Checked against N_1 of the Baer chain.
RadicalResult h_locally_nilpotent_radical(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// One row of the comparison report.
struct RadicalEntry {
  bool available = false;
  std::optional<Subspace> space;
  std::string method;
  std::string blocked_by;  ///< why it is unavailable
  std::vector<std::string> certificates;
};

struct CheckResult {
  std::string name;
  std::string status;  ///< pass, fail, unknown, unsupported or info
  std::string detail;
};

struct ComparisonReport {
  std::map<std::string, RadicalEntry> radicals;
  /// containment[a][b] is "yes", "no" or "n/a" for radicals[a] ⊆ radicals[b].
  std::map<std::string, std::map<std::string, std::string>> containment;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Every radical that can be computed, the containment matrix, and pass/fail
/// for each identity that must hold. Unavailable entries name the blocking
/// precondition.
ComparisonReport comparison_report(const HModuleAlgebra& m, const RadicalOptions& opts = {});

}  // namespace hopfrad
