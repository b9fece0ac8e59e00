#pragma once

// Subalgebras of End(k^n) given by generators. Used to decide H-simplicity
// without enumerating: the H-ideals of R are exactly the subspaces stable
// under every L_r, R_r and h·(-), i.e. the submodules over the operator
// algebra those maps generate.

#include <vector>

#include "hopfrad/matrix.hpp"
#include "hopfrad/subspace.hpp"

namespace hopfrad {

/// Basis of the unital subalgebra of n×n matrices generated by gens.
std::vector<Matrix> matrix_algebra_closure(const Field& f, std::size_t n, const std::vector<Matrix>& gens);

/// True when {a : tr(ab) = 0 for all b} is the radical of a subalgebra of
/// End(k^n): characteristic 0 or p > n.
bool trace_radical_applies(const Field& f, std::size_t n);

/// {a in span(basis) : tr(ab) = 0 for all basis b}. Throws Unsupported when
/// trace_radical_applies is false.
std::vector<Matrix> trace_radical(const Field& f, std::size_t n, const std::vector<Matrix>& basis);

/// Basis of {X : XG = GX for every G in gens}.
std::vector<Matrix> commutant(const Field& f, std::size_t n, const std::vector<Matrix>& gens);

/// span{ M v : M in mats, v in k^n }.
Subspace joint_image(const Field& f, std::size_t n, const std::vector<Matrix>& mats);

}  // namespace hopfrad
