#include "hopfrad/smash.hpp"

#include "hopfrad/errors.hpp"

namespace hopfrad {

FiniteDimAlgebra smash_product(const HModuleAlgebra& m) {
  if (!m.algebra.unit()) throw PreconditionFailed("smash product needs R to have a unit");
  const std::size_t n = m.dim();
  const std::size_t d = m.hopf_dim();
  const Field& f = m.field();
  FiniteDimAlgebra s(f, n * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t h = 0; h < d; ++h) {
      const Vector& delta = m.hopf.comult[h];
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t g = 0; g < d; ++g) {
          Vector prod = vec::zeros(f, n * d);
          for (std::size_t h1 = 0; h1 < d; ++h1)
            for (std::size_t h2 = 0; h2 < d; ++h2) {
              const Scalar& c = delta[h1 * d + h2];
              if (c.is_zero()) continue;
              Element left = m.algebra.multiply(m.algebra.basis_vector(a), m.basis_action(h1, b));
              const Vector& right = m.hopf.algebra.basis_product(h2, g);
              for (std::size_t r = 0; r < n; ++r) {
                if (left[r].is_zero()) continue;
                for (std::size_t q = 0; q < d; ++q) {
                  if (!right[q].is_zero()) prod[r * d + q] += c * left[r] * right[q];
                }
              }
            }
          s.set_basis_product(a * d + h, b * d + g, std::move(prod));
        }
    }
  Element unit = vec::zeros(f, n * d);
  const Element& ur = *m.algebra.unit();
  const Element uh = m.hopf.one();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < d; ++q) unit[r * d + q] = ur[r] * uh[q];
  s.set_unit(unit);
  return s;
}

Element embed_algebra(const HModuleAlgebra& m, const Element& a) {
  const std::size_t d = m.hopf_dim();
  const Element uh = m.hopf.one();
  Element out = vec::zeros(m.field(), m.dim() * d);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t q = 0; q < d; ++q) out[r * d + q] = a[r] * uh[q];
  return out;
}

Element embed_hopf(const HModuleAlgebra& m, const Element& h) {
  if (!m.algebra.unit()) throw PreconditionFailed("1_R # h needs R to have a unit");
  const std::size_t d = m.hopf_dim();
  const Element& ur = *m.algebra.unit();
  Element out = vec::zeros(m.field(), m.dim() * d);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t q = 0; q < d; ++q) out[r * d + q] = ur[r] * h[q];
  return out;
}

Subspace algebra_image(const HModuleAlgebra& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.dim(); ++r) rows.push_back(embed_algebra(m, m.algebra.basis_vector(r)));
  return Subspace::span(m.field(), rows, m.dim() * m.hopf_dim());
}

Subspace pull_back_to_algebra(const HModuleAlgebra& m, const Subspace& in_smash) {
  // Solve embed(a) ∈ S: the normal form of embed(a) modulo S must vanish.
  const std::size_t n = m.dim();
  const std::size_t big = n * m.hopf_dim();
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < n; ++r) cols.push_back(in_smash.reduce(embed_algebra(m, m.algebra.basis_vector(r))));
  Matrix sys = Matrix::from_columns(m.field(), cols, big);
  return Subspace::span(m.field(), kernel_basis(sys), n);
}

}  // namespace hopfrad
