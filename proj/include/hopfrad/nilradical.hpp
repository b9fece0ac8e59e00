#pragma once

#include <string>
#include <vector>

#include "hopfrad/algebra.hpp"

namespace hopfrad {

/// Ways to compute the largest nilpotent ideal of a finite-dimensional
/// algebra.
///   trace:      {a : tr L_{ab} = 0 for all b}; char 0 or p > dim A
///   ciw:        Cohen-Ivanyos-Wales refinement of the trace form with
///               p-power traces of integer lifts; any prime p
///   exhaustive: largest nilpotent ideal among all enumerated ideals
///   automatic:  trace when it applies, otherwise ciw
enum class NilBackend { automatic, trace, ciw, exhaustive };
std::string to_string(NilBackend b);

struct NilradicalOptions {
  NilBackend backend = NilBackend::automatic;
  /// Also run every other applicable backend (exhaustive only within the
  /// limits) and throw Contradiction on disagreement.
  bool cross_check = false;
  EnumerationLimits limits;
};

struct NilradicalResult {
  Subspace space;
  NilBackend backend = NilBackend::automatic;
  /// Fallbacks taken and cross-checks run.
  std::vector<std::string> notes;
};

NilradicalResult compute_nilradical(const FiniteDimAlgebra& a, const NilradicalOptions& opts = {});
Subspace nilradical(const FiniteDimAlgebra& a, const NilradicalOptions& opts = {});

bool trace_backend_applies(const FiniteDimAlgebra& a);
Subspace nilradical_trace(const FiniteDimAlgebra& a);
Subspace nilradical_ciw(const FiniteDimAlgebra& a);
Subspace nilradical_exhaustive(const FiniteDimAlgebra& a, const EnumerationLimits& limits = {});

}  // namespace hopfrad
