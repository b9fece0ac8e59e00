#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hopfrad/matrix.hpp"

namespace hopfrad {

/// A subspace of k^n stored by its reduced row-echelon basis.
///
/// The basis is canonical: two Subspace values are equal exactly when they
/// describe the same subspace. Every ideal, radical and G_t set in the
/// library is one of these.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const Field& f, std::size_t n);
  static Subspace full(const Field& f, std::size_t n);
  /// Throws DimensionMismatch if some vector does not have length n.
  static Subspace span(const Field& f, const std::vector<Vector>& vectors, std::size_t n);

  /// Wraps rows already in RREF with the given pivots. No checking beyond
  /// sizes; used by the enumerator, which produces canonical rows directly.
  static Subspace from_canonical(const Field& f, std::size_t n, std::vector<Vector> rows,
                                 std::vector<std::size_t> pivots);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == n_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates that are not pivot columns, ascending. These index the
  /// canonical complement used for quotients.
  std::vector<std::size_t> non_pivots() const;

  /// v with every pivot coordinate eliminated; zero iff v is in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coefficients of v in the stored basis (v must lie in the subspace).
  Vector coordinates(const Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  Matrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Canonical order: by dimension, then pivots, then entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Number of subspaces of F_p^n (sum of Gaussian binomials), saturating at
/// UINT64_MAX.
std::uint64_t count_subspaces(std::size_t n, std::uint64_t p);

struct EnumerationLimits {
  /// Bound on p^n.
  std::uint64_t cap = 10000;
  /// Bound on the number of subspaces visited.
  std::uint64_t subspace_cap = 1000000;
};

/// Checks the limits; throws CapExceeded or PreconditionFailed (rationals).
void check_enumerable(std::size_t n, const Field& f, const EnumerationLimits& limits);

/// Calls visit on every subspace of F_p^n exactly once, ordered by dimension,
/// then pivot set, then free entries.
void for_each_subspace(std::size_t n, const Field& f, const EnumerationLimits& limits,
                       const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> enumerate_subspaces(std::size_t n, const Field& f,
                                          const EnumerationLimits& limits = {});

/// Every vector of F_p^n, in lexicographic order (first coordinate slowest).
std::vector<Vector> enumerate_vectors(std::size_t n, const Field& f, std::uint64_t cap = 10000);

/// Nonzero vectors of F_p^n whose first nonzero coordinate is 1, one per
/// line, in the order of enumerate_vectors.
std::vector<Vector> enumerate_projective_points(std::size_t n, const Field& f, std::uint64_t cap = 10000);

/// Position of v in enumerate_vectors order.
std::uint64_t vector_index(const Vector& v);

/// All elements of a subspace over a prime field.
std::vector<Vector> enumerate_elements(const Subspace& s, std::uint64_t cap = 10000);

}  // namespace hopfrad
