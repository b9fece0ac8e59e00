#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfrad/hideal.hpp"

namespace hopfrad {

/// One step a_{n+1} = (h·a_n) b (h'·a_n).
struct MStep {
  Element h, b, h_prime;
};

/// An m-sequence: values[0] = start, values[n+1] computed from steps[n].
struct MSequence {
  Element start;
  std::vector<MStep> steps;
  std::vector<Element> values;

  /// Recomputes every value from its step.
  bool consistent(const HModuleAlgebra& m) const;
};

enum class MVerdict { nilpotent, not_nilpotent, unknown };
std::string to_string(MVerdict v);

struct MembershipOptions {
  std::uint64_t seed = 0xA1CEB;
  std::size_t trials = 64;
  /// Search depth; 0 means 2·dim R.
  std::size_t depth = 0;
  /// N_τ if already known, to skip recomputing it for every element.
  std::optional<Subspace> tau;
};

struct MembershipResult {
  /// Final verdict, always the oracle's.
  MVerdict verdict = MVerdict::unknown;
  /// For nilpotent: every m-sequence from a has a_k = 0 (values are indexed
  /// from a_1 = a).
  std::size_t bound = 0;

  /// Subspace iteration V_1 = span{a}, V_{n+1} = span((L·V_n)R(L·V_n)).
  MVerdict over_approximation = MVerdict::unknown;
  std::size_t over_approximation_bound = 0;

  /// Random search; not_nilpotent only with a projective repetition.
  MVerdict search = MVerdict::unknown;
  MSequence trace;

  bool oracle_member = false;
  std::string detail;
};

/// Decides whether every m-sequence from a reaches 0. With L given, steps use
/// h, h' in L (span L must equal H). Throws Contradiction when a verdict
/// source disagrees with the oracle a ∈ N_τ.
MembershipResult wh_membership(const HModuleAlgebra& m, const Element& a,
                               const std::optional<std::vector<Element>>& l = std::nullopt,
                               const MembershipOptions& opts = {});

/// Exact W_H (or W_L) over F_p: all elements from which every m-sequence
/// reaches 0, via the greatest fixed point of "has a nonzero successor" on
/// the finite state graph. Sorted in enumerate_vectors order.
std::vector<Element> exact_m_nilpotent_elements(const HModuleAlgebra& m,
                                                const std::optional<std::vector<Element>>& l = std::nullopt,
                                                std::uint64_t cap = 10000);

}  // namespace hopfrad
