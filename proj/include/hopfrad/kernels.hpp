#pragma once

// Data-parallel inner loops. Each kernel exists twice: an OpenMP version in
// hopfrad::par used by the library, and a plain loop in hopfrad::serial kept
// as the reference the tests and benchmarks compare against. Both return
// identical results in identical order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hopfrad/subspace.hpp"

namespace hopfrad {

class FiniteDimAlgebra;

using IndexTriple = std::array<std::size_t, 3>;
using SubspacePredicate = std::function<bool(const Subspace&)>;
using SuccessorFn = std::function<std::vector<std::uint32_t>(std::size_t)>;

namespace serial {

/// Basis triples (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k), lexicographic.
std::vector<IndexTriple> associativity_failures(const FiniteDimAlgebra& a);

/// Candidates satisfying pred, in input order.
std::vector<Subspace> filter_subspaces(const std::vector<Subspace>& candidates, const SubspacePredicate& pred);

/// succ(i) for every i < count.
std::vector<std::vector<std::uint32_t>> successor_sets(std::size_t count, const SuccessorFn& succ);

/// First ordered pair (i, j) with images[i] * A * images[j] = 0, scanning i
/// then j, skipping zero subspaces.
std::optional<std::pair<std::size_t, std::size_t>> first_annihilating_pair(const FiniteDimAlgebra& a,
                                                                           const std::vector<Subspace>& images);

}  // namespace serial

namespace par {

std::vector<IndexTriple> associativity_failures(const FiniteDimAlgebra& a);
std::vector<Subspace> filter_subspaces(const std::vector<Subspace>& candidates, const SubspacePredicate& pred);
std::vector<std::vector<std::uint32_t>> successor_sets(std::size_t count, const SuccessorFn& succ);
std::optional<std::pair<std::size_t, std::size_t>> first_annihilating_pair(const FiniteDimAlgebra& a,
                                                                           const std::vector<Subspace>& images);

}  // namespace par

}  // namespace hopfrad
