#pragma once

#include <random>
#include <vector>

#include "hopfrad/fixtures.hpp"
#include "hopfrad/opalg.hpp"

namespace hopfrad::testkit {

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime_field()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
    return f.from_int(d(rng));
  }
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  return f.from_int(d(rng));
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

/// Span of up to k random vectors.
inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(f, n, rng));
  return Subspace::span(f, vs, n);
}

inline Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  Matrix m(f, n, n);
  std::bernoulli_distribution keep(density);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) m(r, c) = random_scalar(f, rng);
  return m;
}

inline Vector flatten(const Matrix& m) { return m.data(); }

/// Structure constants of a subalgebra of n×n matrices in the given basis.
inline FiniteDimAlgebra algebra_from_matrices(const Field& f, std::size_t n, const std::vector<Matrix>& basis) {
  const std::size_t d = basis.size();
  std::vector<Vector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  Matrix coords = Matrix::from_columns(f, flat, n * n);
  FiniteDimAlgebra a(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.set_basis_product(i, j, *solve(coords, flatten(basis[i] * basis[j])));
  a.set_unit(solve(coords, flatten(Matrix::identity(f, n))));
  return a;
}

/// Unital subalgebra of M_n generated by random (sparse, often upper
/// triangular) matrices; dimension at most max_dim or nothing.
inline std::optional<FiniteDimAlgebra> random_matrix_algebra(const Field& f, std::size_t n, std::size_t max_dim,
                                                             std::mt19937_64& rng) {
  std::vector<Matrix> gens;
  std::uniform_int_distribution<int> count(1, 2);
  std::bernoulli_distribution triangular(0.7);
  for (int g = count(rng); g > 0; --g) {
    Matrix m = random_matrix(f, n, rng);
    if (triangular(rng)) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) m(r, c) = f.zero();
    }
    gens.push_back(m);
  }
  auto basis = matrix_algebra_closure(f, n, gens);
  if (basis.size() > max_dim) return std::nullopt;
  return algebra_from_matrices(f, n, basis);
}

/// A × A with kC_2 swapping the factors.
inline HModuleAlgebra swap_square(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  FiniteDimAlgebra sq(f, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector& p = a.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        if (p[k].is_zero()) continue;
        sq.add_structure_constant(i, j, k, p[k]);
        sq.add_structure_constant(d + i, d + j, d + k, p[k]);
      }
    }
  if (a.unit()) {
    Element u = *a.unit();
    u.insert(u.end(), a.unit()->begin(), a.unit()->end());
    sq.set_unit(u);
  }
  HModuleAlgebra m;
  m.algebra = sq;
  m.hopf = group_algebra_c2(f);
  m.action.assign(2 * 2 * d, vec::zeros(f, 2 * d));
  for (std::size_t r = 0; r < 2 * d; ++r) {
    m.action[r] = sq.basis_vector(r);
    m.action[2 * d + r] = sq.basis_vector(r < d ? r + d : r - d);
  }
  return m;
}

/// The algebra with H = k acting trivially.
inline HModuleAlgebra trivially_acted(const FiniteDimAlgebra& a) {
  HModuleAlgebra m;
  m.algebra = a;
  m.hopf = trivial_hopf(a.field());
  for (std::size_t r = 0; r < a.dim(); ++r) m.action.push_back(a.basis_vector(r));
  return m;
}

inline std::vector<NamedFixture> finite_field_fixtures() {
  std::vector<NamedFixture> out;
  for (auto& f : builtin_fixtures())
    if (f.module.field().is_prime_field()) out.push_back(f);
  return out;
}

/// Element of R from coordinates in the RREF basis of a subspace.
inline Element from_coordinates(const Subspace& s, const Vector& c) {
  Element out = vec::zeros(s.field(), s.ambient_dim());
  for (std::size_t i = 0; i < c.size(); ++i) vec::axpy(out, c[i], s.basis()[i]);
  return out;
}

inline Subspace lift_subspace(const Subspace& parent, const Subspace& inner) {
  std::vector<Vector> vs;
  for (const auto& b : inner.basis()) vs.push_back(from_coordinates(parent, b));
  return Subspace::span(parent.field(), vs, parent.ambient_dim());
}

}  // namespace hopfrad::testkit
