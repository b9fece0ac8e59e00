#pragma once

#include <string>
#include <vector>

#include "hopfrad/radicals.hpp"

namespace hopfrad {

/// A fast-path radical next to the same radical recomputed from the full
/// list of H-ideals.
struct OracleEntry {
  std::string name;
  bool available = false;
  std::string blocked_by;
  Subspace fast;
  Subspace brute;
  bool match = false;
};

struct OracleReport {
  std::vector<HIdeal> h_ideals;
  std::vector<OracleEntry> entries;
  /// One line per mismatch; empty means full parity.
  std::vector<std::string> diffs;
};

/// Brute-force recomputation over F_p. Throws CapExceeded beyond the limits.
///   nilradical   fast backend vs largest nilpotent enumerated ideal
///   r_Hb         Baer chain vs intersection of H-semiprime H-ideals
///   W_H, W_L     exact m-sequence sets (L = basis of H) vs elements of N_τ
///   r_Hl, r_Hj   fast routes vs sum of nilpotent H-ideals
///   r_Hbm        maximal-ideal route vs maximal enumerated H-ideals with
///                H-simple unital quotient
///   r_gt         G_t enumeration vs the brute r_Hbm
///   fisher:*     colon ideal vs sum of H-ideals inside the classical radical
///   h-simple     is_h_simple vs the enumerated lattice
OracleReport run_oracle(const HModuleAlgebra& m, const RadicalOptions& opts = {});

/// Maximal proper H-ideals P with R/P H-simple with unit, intersected (R if
/// none), using only the enumerated list.
Subspace brute_brown_mccoy(const HModuleAlgebra& m, const std::vector<HIdeal>& h_ideals);

}  // namespace hopfrad
