#include "hopfrad/opalg.hpp"

#include <deque>

#include "hopfrad/errors.hpp"

namespace hopfrad {

namespace {

Matrix unflatten(const Field& f, std::size_t n, const Vector& v) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

}  // namespace

std::vector<Matrix> matrix_algebra_closure(const Field& f, std::size_t n, const std::vector<Matrix>& gens) {
  std::vector<Vector> spanning{Matrix::identity(f, n).data()};
  Subspace current = Subspace::span(f, spanning, n * n);
  std::deque<Matrix> queue{Matrix::identity(f, n)};
  while (!queue.empty()) {
    Matrix b = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix prod = g * b;
      if (current.contains(prod.data())) continue;
      spanning.push_back(prod.data());
      current = Subspace::span(f, spanning, n * n);
      queue.push_back(std::move(prod));
    }
  }
  std::vector<Matrix> out;
  for (const auto& row : current.basis()) out.push_back(unflatten(f, n, row));
  return out;
}

bool trace_radical_applies(const Field& f, std::size_t n) {
  return f.is_rational() || f.characteristic() > n;
}

std::vector<Matrix> trace_radical(const Field& f, std::size_t n, const std::vector<Matrix>& basis) {
  if (!trace_radical_applies(f, n)) throw Unsupported("trace radical needs characteristic 0 or p > n");
  const std::size_t d = basis.size();
  Matrix gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = (basis[j] * basis[i]).trace();
  std::vector<Matrix> out;
  for (const auto& c : kernel_basis(gram)) {
    Matrix m(f, n, n);
    for (std::size_t k = 0; k < d; ++k) {
      if (!c[k].is_zero()) m = m + basis[k].scaled(c[k]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> commutant(const Field& f, std::size_t n, const std::vector<Matrix>& gens) {
  // Unknown X flattened row-major; each generator contributes n^2 equations.
  Matrix sys(f, gens.size() * n * n, n * n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Matrix& G = gens[g];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t eq = g * n * n + r * n + c;
        // (XG - GX)(r,c) = Σ_k X(r,k)G(k,c) - G(r,k)X(k,c)
        for (std::size_t k = 0; k < n; ++k) {
          sys(eq, r * n + k) += G(k, c);
          sys(eq, k * n + c) -= G(r, k);
        }
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_basis(sys)) out.push_back(unflatten(f, n, v));
  return out;
}

Subspace joint_image(const Field& f, std::size_t n, const std::vector<Matrix>& mats) {
  std::vector<Vector> cols;
  for (const auto& m : mats)
    for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
  return Subspace::span(f, cols, n);
}

}  // namespace hopfrad
