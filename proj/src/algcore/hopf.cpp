#include "hopfrad/hopf.hpp"

#include "hopfrad/errors.hpp"

namespace hopfrad {

namespace {

// Product in H ⊗ H: (a ⊗ b)(c ⊗ d) = ac ⊗ bd, on dim^2 coordinate vectors.
Vector tensor_product_mult(const FiniteDimAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t d = a.dim();
  Vector out = vec::zeros(a.field(), d * d);
  for (std::size_t j1 = 0; j1 < d; ++j1)
    for (std::size_t k1 = 0; k1 < d; ++k1) {
      const Scalar& cx = x[j1 * d + k1];
      if (cx.is_zero()) continue;
      for (std::size_t j2 = 0; j2 < d; ++j2)
        for (std::size_t k2 = 0; k2 < d; ++k2) {
          const Scalar& cy = y[j2 * d + k2];
          if (cy.is_zero()) continue;
          Scalar c = cx * cy;
          const Vector& left = a.basis_product(j1, j2);
          const Vector& right = a.basis_product(k1, k2);
          for (std::size_t p = 0; p < d; ++p) {
            if (left[p].is_zero()) continue;
            for (std::size_t q = 0; q < d; ++q) {
              if (!right[q].is_zero()) out[p * d + q] += c * left[p] * right[q];
            }
          }
        }
    }
  return out;
}

}  // namespace

Element HopfAlgebraData::one() const {
  if (!algebra.unit()) throw PreconditionFailed("Hopf algebra has no unit");
  return *algebra.unit();
}

Vector HopfAlgebraData::coproduct(const Element& h) const {
  const std::size_t d = dim();
  if (h.size() != d) throw DimensionMismatch("coproduct: element length");
  Vector out = vec::zeros(field(), d * d);
  for (std::size_t i = 0; i < d; ++i) vec::axpy(out, h[i], comult[i]);
  return out;
}

Scalar HopfAlgebraData::counit_of(const Element& h) const {
  if (h.size() != dim()) throw DimensionMismatch("counit: element length");
  Scalar s = field().zero();
  for (std::size_t i = 0; i < dim(); ++i) s += h[i] * counit[i];
  return s;
}

Element HopfAlgebraData::antipode_of(const Element& h) const { return antipode.apply(h); }

HopfAlgebraData trivial_hopf(const Field& f) {
  HopfAlgebraData h;
  h.algebra = FiniteDimAlgebra(f, 1);
  h.algebra.set_basis_product(0, 0, {f.one()});
  h.algebra.set_unit(Element{f.one()});
  h.comult = {Vector{f.one()}};
  h.counit = {f.one()};
  h.antipode = Matrix::identity(f, 1);
  return h;
}

ValidationReport validate_hopf(const HopfAlgebraData& h) {
  ValidationReport report;
  const std::size_t d = h.dim();
  const Field& f = h.field();
  if (h.comult.size() != d || h.counit.size() != d || h.antipode.rows() != d || h.antipode.cols() != d) {
    report.add("shape", {}, "comultiplication, counit or antipode has the wrong size");
    return report;
  }
  for (const auto& c : h.comult) {
    if (c.size() != d * d) {
      report.add("shape", {}, "comultiplication entry has the wrong size");
      return report;
    }
  }
  if (!h.algebra.unit()) {
    report.add("unit", {}, "Hopf algebra must have a unit");
    return report;
  }
  const Element one = *h.algebra.unit();

  for (std::size_t i = 0; i < d; ++i) {
    const Vector& delta = h.comult[i];
    // (Δ⊗id)Δ and (id⊗Δ)Δ as dim^3 vectors.
    Vector left = vec::zeros(f, d * d * d);
    Vector right = vec::zeros(f, d * d * d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = delta[j * d + k];
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar& cj = h.comult[j][a * d + b];
            if (!cj.is_zero()) left[(a * d + b) * d + k] += c * cj;
            const Scalar& ck = h.comult[k][a * d + b];
            if (!ck.is_zero()) right[(j * d + a) * d + b] += c * ck;
          }
      }
    if (left != right) report.add("coassociativity", {i}, "(Δ⊗id)Δ != (id⊗Δ)Δ");

    Vector eps_left = vec::zeros(f, d);
    Vector eps_right = vec::zeros(f, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = delta[j * d + k];
        if (c.is_zero()) continue;
        eps_left[k] += h.counit[j] * c;
        eps_right[j] += h.counit[k] * c;
      }
    Element ei = h.algebra.basis_vector(i);
    if (eps_left != ei || eps_right != ei) report.add("counit", {i}, "(ε⊗id)Δ or (id⊗ε)Δ differs from id");

    // m(S⊗id)Δ and m(id⊗S)Δ against ε(e_i) 1.
    Element s_left = h.algebra.zero();
    Element s_right = h.algebra.zero();
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = delta[j * d + k];
        if (c.is_zero()) continue;
        Element ej = h.algebra.basis_vector(j);
        Element ek = h.algebra.basis_vector(k);
        vec::axpy(s_left, c, h.algebra.multiply(h.antipode_of(ej), ek));
        vec::axpy(s_right, c, h.algebra.multiply(ej, h.antipode_of(ek)));
      }
    Element target = vec::scale(h.counit[i], one);
    if (s_left != target || s_right != target) report.add("antipode", {i}, "m(S⊗id)Δ or m(id⊗S)Δ differs from uε");
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector& prod = h.algebra.basis_product(i, j);
      if (h.coproduct(prod) != tensor_product_mult(h.algebra, h.comult[i], h.comult[j])) {
        report.add("comult-multiplicative", {i, j}, "Δ(e_i e_j) != Δ(e_i)Δ(e_j)");
      }
      if (h.counit_of(prod) != h.counit[i] * h.counit[j]) {
        report.add("counit-multiplicative", {i, j}, "ε(e_i e_j) != ε(e_i)ε(e_j)");
      }
    }

  Vector one_one = vec::zeros(f, d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) one_one[j * d + k] = one[j] * one[k];
  if (h.coproduct(one) != one_one) report.add("comult-unit", {}, "Δ(1) != 1⊗1");
  if (!h.counit_of(one).is_one()) report.add("counit-unit", {}, "ε(1) != 1");
  return report;
}

Subspace left_integrals(const HopfAlgebraData& h) {
  const std::size_t d = h.dim();
  const Field& f = h.field();
  Matrix sys(f, d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix block = h.algebra.left_mult(h.algebra.basis_vector(i)) - Matrix::identity(f, d).scaled(h.counit[i]);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sys(i * d + r, c) = block(r, c);
  }
  return Subspace::span(f, kernel_basis(sys), d);
}

std::optional<Element> normalized_integral(const HopfAlgebraData& h) {
  Subspace ints = left_integrals(h);
  for (const auto& t : ints.basis()) {
    Scalar e = h.counit_of(t);
    if (!e.is_zero()) return vec::scale(e.inverse(), t);
  }
  return std::nullopt;
}

}  // namespace hopfrad
