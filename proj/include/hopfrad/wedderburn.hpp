#pragma once

#include <string>
#include <vector>

#include "hopfrad/hideal.hpp"
#include "hopfrad/nilradical.hpp"

namespace hopfrad {

/// A = J ⊕ (simple blocks of A/J), described through the primitive central
/// idempotents of A/J.
struct WedderburnDecomposition {
  Subspace radical;                    ///< J, in A
  FiniteDimAlgebra semisimple;         ///< A/J in quotient coordinates
  std::vector<Element> idempotents;    ///< primitive central idempotents of A/J
  std::vector<Subspace> blocks;        ///< e_i (A/J), in quotient coordinates
  std::vector<std::string> notes;
};

/// Splits A/J by minimal polynomials of central elements. Over F_p the
/// factorization is complete. Over Q only rational roots are split off, and a
/// block is accepted as simple once some central element has an irreducible
/// minimal polynomial of full degree (provable up to degree 3); otherwise
/// Unsupported("non-split") is thrown.
WedderburnDecomposition wedderburn(const FiniteDimAlgebra& a, const NilradicalOptions& nil = {},
                                   std::uint64_t seed = 0xA1CEB);

/// Kernel of A -> block i, i.e. the maximal ideal of A belonging to block i.
Subspace block_kernel(const WedderburnDecomposition& w, std::size_t i);

/// Center of an algebra.
Subspace center(const FiniteDimAlgebra& a);

}  // namespace hopfrad
