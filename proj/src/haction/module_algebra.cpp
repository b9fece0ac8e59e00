#include "hopfrad/module_algebra.hpp"

#include "hopfrad/errors.hpp"
#include "hopfrad/hideal.hpp"
#include "hopfrad/smash.hpp"

namespace hopfrad {

CheckLevel parse_check_level(const std::string& s) {
  if (s == "weak") return CheckLevel::weak;
  if (s == "module") return CheckLevel::module;
  if (s == "unital") return CheckLevel::unital;
  throw ParseError("unknown check level '" + s + "' (expected weak, module or unital)");
}

std::string to_string(CheckLevel level) {
  switch (level) {
    case CheckLevel::weak:
      return "weak";
    case CheckLevel::module:
      return "module";
    case CheckLevel::unital:
      return "unital";
  }
  return "unital";
}

Element HModuleAlgebra::act(const Element& h, const Element& r) const {
  if (h.size() != hopf_dim() || r.size() != dim()) throw DimensionMismatch("act: element length mismatch");
  Element out = algebra.zero();
  for (std::size_t i = 0; i < hopf_dim(); ++i) {
    if (h[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!r[j].is_zero()) vec::axpy(out, h[i] * r[j], basis_action(i, j));
    }
  }
  return out;
}

Matrix HModuleAlgebra::action_matrix(const Element& h) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(act(h, algebra.basis_vector(j)));
  return Matrix::from_columns(field(), cols, dim());
}

std::vector<Element> HModuleAlgebra::hopf_basis() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < hopf_dim(); ++i) out.push_back(hopf.algebra.basis_vector(i));
  return out;
}

ValidationReport validate_action(const HModuleAlgebra& m, CheckLevel level) {
  ValidationReport report;
  const std::size_t n = m.dim();
  const std::size_t d = m.hopf_dim();
  if (m.action.size() != n * d) {
    report.add("shape", {}, "action tensor has the wrong number of entries");
    return report;
  }
  for (const auto& v : m.action) {
    if (v.size() != n) {
      report.add("shape", {}, "action entry has the wrong length");
      return report;
    }
  }
  if (!m.hopf.algebra.unit()) {
    report.add("shape", {}, "H has no unit");
    return report;
  }
  const Element one_h = *m.hopf.algebra.unit();

  for (std::size_t r = 0; r < n; ++r) {
    Element er = m.algebra.basis_vector(r);
    if (m.act(one_h, er) != er) report.add("hopf-unit-acts", {r}, "1_H · e_r != e_r");
  }

  // h·(rs) = Σ (h_1·r)(h_2·s)
  for (std::size_t i = 0; i < d; ++i) {
    const Vector& delta = m.hopf.comult[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        Element lhs = m.act(m.hopf.algebra.basis_vector(i), m.algebra.basis_product(r, s));
        Element rhs = m.algebra.zero();
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar& c = delta[a * d + b];
            if (c.is_zero()) continue;
            vec::axpy(rhs, c, m.algebra.multiply(m.basis_action(a, r), m.basis_action(b, s)));
          }
        if (lhs != rhs) report.add("measuring", {i, r, s}, "h·(rs) != Σ (h_1·r)(h_2·s)");
      }
  }

  if (level == CheckLevel::module || level == CheckLevel::unital) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t r = 0; r < n; ++r) {
          Element lhs = m.act(m.hopf.algebra.basis_product(a, b), m.algebra.basis_vector(r));
          Element rhs = m.act(m.hopf.algebra.basis_vector(a), m.basis_action(b, r));
          if (lhs != rhs) report.add("module", {a, b, r}, "(hh')·r != h·(h'·r)");
        }
  }

  if (level == CheckLevel::unital) {
    if (!m.algebra.unit()) {
      report.add("unital", {}, "R has no unit");
    } else {
      const Element& one_r = *m.algebra.unit();
      for (std::size_t i = 0; i < d; ++i) {
        Element lhs = m.act(m.hopf.algebra.basis_vector(i), one_r);
        if (lhs != vec::scale(m.hopf.counit[i], one_r)) report.add("unital", {i}, "h·1_R != ε(h)1_R");
      }
    }
  }
  return report;
}

Subspace act_image(const HModuleAlgebra& m, const std::vector<Element>& hs, const Subspace& s) {
  if (hs.empty()) throw PreconditionFailed("act_image: empty list of H-elements");
  std::vector<Vector> imgs;
  for (const auto& h : hs)
    for (const auto& v : s.basis()) imgs.push_back(m.act(h, v));
  return Subspace::span(m.field(), imgs, m.dim());
}

Subspace h_image(const HModuleAlgebra& m, const Subspace& s) { return act_image(m, m.hopf_basis(), s); }

Subspace h_image(const HModuleAlgebra& m, const Element& a) {
  return h_image(m, Subspace::span(m.field(), {a}, m.dim()));
}

Subspace colon_ideal(const HModuleAlgebra& m, const Subspace& ideal) {
  if (!is_ideal(m.algebra, ideal)) throw PreconditionFailed("colon_ideal: I is not a two-sided ideal");
  const std::size_t n = m.dim();
  const std::size_t d = m.hopf_dim();
  const Field& f = m.field();
  // Matrix of the normal-form map v -> v mod I.
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(ideal.reduce(m.algebra.basis_vector(c)));
  Matrix nf = Matrix::from_columns(f, cols, n);
  Matrix sys(f, d * n, n);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix block = nf * m.action_matrix(m.hopf.algebra.basis_vector(i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(i * n + r, c) = block(r, c);
  }
  Subspace out = Subspace::span(f, kernel_basis(sys), n);
  if (!is_h_ideal(m, out).holds) throw Contradiction("colon_ideal: (I:H) is not an H-ideal");
  return out;
}

HModuleAlgebra quotient_action(const HModuleAlgebra& m, const Subspace& ideal) {
  auto check = is_h_ideal(m, ideal);
  if (!check.holds) throw PreconditionFailed("quotient_action: not an H-ideal (" + check.witness + ")");
  HModuleAlgebra q;
  q.algebra = quotient_algebra(m.algebra, ideal);
  q.hopf = m.hopf;
  auto np = ideal.non_pivots();
  for (std::size_t i = 0; i < m.hopf_dim(); ++i)
    for (auto j : np) q.action.push_back(project_to_quotient(ideal, m.basis_action(i, j)));
  return q;
}

HModuleAlgebra restrict_action(const HModuleAlgebra& m, const Subspace& h_ideal) {
  auto check = is_h_ideal(m, h_ideal);
  if (!check.holds) throw PreconditionFailed("restrict_action: not an H-ideal (" + check.witness + ")");
  HModuleAlgebra r;
  r.algebra = restrict_algebra(m.algebra, h_ideal);
  r.hopf = m.hopf;
  for (std::size_t i = 0; i < m.hopf_dim(); ++i)
    for (const auto& b : h_ideal.basis()) {
      r.action.push_back(h_ideal.coordinates(m.act(m.hopf.algebra.basis_vector(i), b)));
    }
  return r;
}

HModuleAlgebra with_action(const HModuleAlgebra& m, std::vector<Vector> action) {
  HModuleAlgebra out = m;
  out.action = std::move(action);
  return out;
}

ValidationReport check_conjugation_identity(const HModuleAlgebra& m) {
  if (!m.algebra.unit()) throw PreconditionFailed("conjugation identity needs R to have a unit");
  ValidationReport report;
  FiniteDimAlgebra smash = smash_product(m);
  const std::size_t d = m.hopf_dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector& delta = m.hopf.comult[i];
    for (std::size_t a = 0; a < m.dim(); ++a) {
      Element ea = m.algebra.basis_vector(a);
      Element lhs = embed_algebra(m, m.basis_action(i, a));
      Element rhs = smash.zero();
      Element a_hash = embed_algebra(m, ea);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& c = delta[j * d + k];
          if (c.is_zero()) continue;
          Element left = embed_hopf(m, m.hopf.algebra.basis_vector(j));
          Element right = embed_hopf(m, m.hopf.antipode_of(m.hopf.algebra.basis_vector(k)));
          vec::axpy(rhs, c, smash.multiply(smash.multiply(left, a_hash), right));
        }
      if (lhs != rhs) report.add("conjugation", {i, a}, "(h·a)#1 != Σ (1#h_1)(a#1)(1#S(h_2))");
    }
  }
  return report;
}

}  // namespace hopfrad
