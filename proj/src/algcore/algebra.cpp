#include "hopfrad/algebra.hpp"

#include <algorithm>

#include "hopfrad/errors.hpp"
#include "hopfrad/kernels.hpp"

namespace hopfrad {

bool ValidationReport::mentions(const std::string& axiom) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const ValidationFailure& f) { return f.axiom == axiom; });
}

FiniteDimAlgebra::FiniteDimAlgebra(Field f, std::size_t dim)
    : field_(f), dim_(dim), table_(dim * dim, vec::zeros(f, dim)) {}

void FiniteDimAlgebra::set_basis_product(std::size_t i, std::size_t j, Vector v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) throw DimensionMismatch("set_basis_product: index or length");
  table_[i * dim_ + j] = std::move(v);
}

void FiniteDimAlgebra::add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("structure constant index out of range");
  table_[i * dim_ + j][k] += c;
}

void FiniteDimAlgebra::set_unit(std::optional<Element> u) {
  if (u && u->size() != dim_) throw DimensionMismatch("unit vector length");
  unit_ = std::move(u);
}

Element FiniteDimAlgebra::multiply(const Element& u, const Element& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("multiply: element length mismatch");
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      vec::axpy(out, u[i] * v[j], table_[i * dim_ + j]);
    }
  }
  return out;
}

Matrix FiniteDimAlgebra::left_mult(const Element& a) const {
  std::vector<Vector> cols;
  cols.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(field_, cols, dim_);
}

Matrix FiniteDimAlgebra::right_mult(const Element& a) const {
  std::vector<Vector> cols;
  cols.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(multiply(basis_vector(j), a));
  return Matrix::from_columns(field_, cols, dim_);
}

ValidationReport validate_algebra(const FiniteDimAlgebra& a) {
  ValidationReport report;
  for (const auto& t : par::associativity_failures(a)) {
    report.add("associativity", {t[0], t[1], t[2]}, "(e_i e_j) e_k != e_i (e_j e_k)");
  }
  if (a.unit()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Element ei = a.basis_vector(i);
      if (a.multiply(*a.unit(), ei) != ei) report.add("left-unit", {i}, "1 e_i != e_i");
      if (a.multiply(ei, *a.unit()) != ei) report.add("right-unit", {i}, "e_i 1 != e_i");
    }
  }
  return report;
}

namespace {

// Solves for e with the requested one- or two-sided unit equations.
std::optional<Element> solve_unit(const FiniteDimAlgebra& a, bool left, bool right) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (n == 0) return std::nullopt;
  std::size_t blocks = (left ? 1 : 0) + (right ? 1 : 0);
  // Unknown e = sum_m x_m e_m. e e_i = sum_m x_m c[m][i]; e_i e = sum_m x_m c[i][m].
  Matrix sys(f, blocks * n * n, n);
  Vector rhs = vec::zeros(f, blocks * n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (left) {
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m) sys(row, m) = a.basis_product(m, i)[k];
        rhs[row] = k == i ? f.one() : f.zero();
      }
    }
    if (right) {
      for (std::size_t k = 0; k < n; ++k, ++row) {
        for (std::size_t m = 0; m < n; ++m) sys(row, m) = a.basis_product(i, m)[k];
        rhs[row] = k == i ? f.one() : f.zero();
      }
    }
  }
  return solve(sys, rhs);
}

}  // namespace

std::optional<Element> find_unit(const FiniteDimAlgebra& a) {
  // A two-sided unit is unique when it exists, so any solution is the unit.
  return solve_unit(a, true, true);
}

std::optional<Element> find_left_unit(const FiniteDimAlgebra& a) { return solve_unit(a, true, false); }
std::optional<Element> find_right_unit(const FiniteDimAlgebra& a) { return solve_unit(a, false, true); }

Subspace subspace_product(const FiniteDimAlgebra& a, const Subspace& x, const Subspace& y) {
  std::vector<Vector> prods;
  prods.reserve(x.dim() * y.dim());
  for (const auto& u : x.basis()) {
    for (const auto& v : y.basis()) {
      Vector w = a.multiply(u, v);
      if (!vec::is_zero(w)) prods.push_back(std::move(w));
    }
  }
  return Subspace::span(a.field(), prods, a.dim());
}

bool is_ideal(const FiniteDimAlgebra& a, const Subspace& s) {
  for (const auto& v : s.basis()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Element ei = a.basis_vector(i);
      if (!s.contains(a.multiply(ei, v)) || !s.contains(a.multiply(v, ei))) return false;
    }
  }
  return true;
}

Vector project_to_quotient(const Subspace& ideal, const Vector& v) {
  Vector r = ideal.reduce(v);
  Vector out;
  for (auto j : ideal.non_pivots()) out.push_back(r[j]);
  return out;
}

Vector lift_from_quotient(const Subspace& ideal, const Vector& q) {
  auto np = ideal.non_pivots();
  if (q.size() != np.size()) throw DimensionMismatch("lift_from_quotient: length mismatch");
  Vector out = vec::zeros(ideal.field(), ideal.ambient_dim());
  for (std::size_t i = 0; i < np.size(); ++i) out[np[i]] = q[i];
  return out;
}

Subspace preimage(const Subspace& ideal, const Subspace& in_quotient) {
  std::vector<Vector> rows = ideal.basis();
  for (const auto& q : in_quotient.basis()) rows.push_back(lift_from_quotient(ideal, q));
  return Subspace::span(ideal.field(), rows, ideal.ambient_dim());
}

Subspace image_in_quotient(const Subspace& ideal, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(project_to_quotient(ideal, v));
  return Subspace::span(ideal.field(), rows, ideal.ambient_dim() - ideal.dim());
}

FiniteDimAlgebra quotient_algebra(const FiniteDimAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw PreconditionFailed("quotient_algebra: subspace is not a two-sided ideal");
  auto np = ideal.non_pivots();
  FiniteDimAlgebra q(a.field(), np.size());
  for (std::size_t i = 0; i < np.size(); ++i) {
    for (std::size_t j = 0; j < np.size(); ++j) {
      q.set_basis_product(i, j, project_to_quotient(ideal, a.basis_product(np[i], np[j])));
    }
  }
  if (a.unit() && !np.empty()) q.set_unit(project_to_quotient(ideal, *a.unit()));
  return q;
}

FiniteDimAlgebra restrict_algebra(const FiniteDimAlgebra& a, const Subspace& sub) {
  FiniteDimAlgebra r(a.field(), sub.dim());
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      Vector p = a.multiply(sub.basis()[i], sub.basis()[j]);
      if (!sub.contains(p)) throw PreconditionFailed("restrict_algebra: subspace not closed under multiplication");
      r.set_basis_product(i, j, sub.coordinates(p));
    }
  }
  if (a.unit() && sub.contains(*a.unit())) r.set_unit(sub.coordinates(*a.unit()));
  return r;
}

FiniteDimAlgebra unitization(const FiniteDimAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  FiniteDimAlgebra u(f, n + 1);
  u.add_structure_constant(0, 0, 0, f.one());
  for (std::size_t i = 0; i < n; ++i) {
    u.add_structure_constant(0, i + 1, i + 1, f.one());
    u.add_structure_constant(i + 1, 0, i + 1, f.one());
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) u.add_structure_constant(i + 1, j + 1, k + 1, p[k]);
      }
    }
  }
  u.set_unit(vec::unit(f, n + 1, 0));
  return u;
}

}  // namespace hopfrad
