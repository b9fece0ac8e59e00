#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfrad/matrix.hpp"
#include "hopfrad/subspace.hpp"

namespace hopfrad {

/// Coordinates of an algebra element in the algebra's fixed basis.
using Element = Vector;

struct ValidationFailure {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string detail;
};

/// Empty report means the object is valid.
struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool ok() const { return failures.empty(); }
  void add(std::string axiom, std::vector<std::size_t> indices, std::string detail = {}) {
    failures.push_back({std::move(axiom), std::move(indices), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
  /// True if some failure carries this axiom name.
  bool mentions(const std::string& axiom) const;
};

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k, possibly without unit.
class FiniteDimAlgebra {
 public:
  FiniteDimAlgebra() = default;
  /// Zero multiplication algebra of the given dimension.
  FiniteDimAlgebra(Field f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Vector& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_basis_product(std::size_t i, std::size_t j, Vector v);
  void add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  const std::optional<Element>& unit() const { return unit_; }
  void set_unit(std::optional<Element> u);
  bool has_unit() const { return unit_.has_value(); }

  Element basis_vector(std::size_t i) const { return vec::unit(field_, dim_, i); }
  Element zero() const { return vec::zeros(field_, dim_); }

  /// Bilinear product; throws DimensionMismatch on wrong lengths.
  Element multiply(const Element& u, const Element& v) const;
  /// Matrix of x -> a x.
  Matrix left_mult(const Element& a) const;
  /// Matrix of x -> x a.
  Matrix right_mult(const Element& a) const;

  friend bool operator==(const FiniteDimAlgebra&, const FiniteDimAlgebra&) = default;

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Vector> table_;
  std::optional<Element> unit_;
};

/// Associativity on basis triples, and two-sidedness of the declared unit.
ValidationReport validate_algebra(const FiniteDimAlgebra& a);

/// Solves e e_i = e_i = e_i e for all i; the unique solution or nothing.
std::optional<Element> find_unit(const FiniteDimAlgebra& a);
std::optional<Element> find_left_unit(const FiniteDimAlgebra& a);
std::optional<Element> find_right_unit(const FiniteDimAlgebra& a);

/// Span of pairwise basis products of two subspaces.
Subspace subspace_product(const FiniteDimAlgebra& a, const Subspace& x, const Subspace& y);
bool is_ideal(const FiniteDimAlgebra& a, const Subspace& s);

/// Quotient by a two-sided ideal. The quotient basis is the images of the
/// coordinate vectors e_j with j a non-pivot column of the ideal's RREF
/// basis, in ascending order.
FiniteDimAlgebra quotient_algebra(const FiniteDimAlgebra& a, const Subspace& ideal);
/// Image of v in the quotient coordinates described above.
Vector project_to_quotient(const Subspace& ideal, const Vector& v);
/// Inverse of the projection on the complement: quotient coordinates -> ambient.
Vector lift_from_quotient(const Subspace& ideal, const Vector& q);
/// Preimage of a subspace of the quotient.
Subspace preimage(const Subspace& ideal, const Subspace& in_quotient);
/// Image of a subspace (containing or not the ideal) in the quotient.
Subspace image_in_quotient(const Subspace& ideal, const Subspace& s);

/// Subalgebra structure on a multiplicatively closed subspace, in the basis
/// given by its RREF rows.
FiniteDimAlgebra restrict_algebra(const FiniteDimAlgebra& a, const Subspace& sub);

/// Direct sum embedding of the unit: algebra k ⊕ A with (λ,a)(μ,b) = (λμ, λb + μa + ab).
/// Basis index 0 is the adjoined unit.
FiniteDimAlgebra unitization(const FiniteDimAlgebra& a);

}  // namespace hopfrad
