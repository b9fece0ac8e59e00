#include "hopfrad/hideal.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hopfrad/errors.hpp"
#include "hopfrad/kernels.hpp"
#include "hopfrad/opalg.hpp"
#include "hopfrad/poly.hpp"

namespace hopfrad {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes:
      return "true";
    case Truth::no:
      return "false";
    case Truth::unknown:
      return "unknown";
  }
  return "unknown";
}

HIdealCheck is_h_ideal(const HModuleAlgebra& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("is_h_ideal: subspace lives in the wrong space");
  HIdealCheck out;
  auto fail = [&](std::string what, Element v) {
    out.holds = false;
    out.witness = std::move(what) + " = " + vec::to_string(v) + " not in S";
    out.value = std::move(v);
  };
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Vector& v = s.basis()[b];
    for (std::size_t r = 0; r < m.dim(); ++r) {
      Element er = m.algebra.basis_vector(r);
      Element left = m.algebra.multiply(er, v);
      if (!s.contains(left)) {
        fail("e_" + std::to_string(r) + " * s_" + std::to_string(b), left);
        return out;
      }
      Element right = m.algebra.multiply(v, er);
      if (!s.contains(right)) {
        fail("s_" + std::to_string(b) + " * e_" + std::to_string(r), right);
        return out;
      }
    }
    for (std::size_t h = 0; h < m.hopf_dim(); ++h) {
      Element img = m.act(m.hopf.algebra.basis_vector(h), v);
      if (!s.contains(img)) {
        fail("h_" + std::to_string(h) + " . s_" + std::to_string(b), img);
        return out;
      }
    }
  }
  return out;
}

HIdeal h_ideal_generated(const HModuleAlgebra& m, const Subspace& e) {
  const Subspace whole = Subspace::full(m.field(), m.dim());
  Subspace he = h_image(m, e);
  Subspace rhe = subspace_product(m.algebra, whole, he);
  Subspace her = subspace_product(m.algebra, he, whole);
  Subspace rher = subspace_product(m.algebra, whole, her);
  Subspace out = sum(sum(he, rhe), sum(her, rher));
  if (!e.is_subspace_of(out)) throw Contradiction("h_ideal_generated: E is not contained in (E)");
  auto check = is_h_ideal(m, out);
  if (!check.holds) throw Contradiction("h_ideal_generated: (E) is not an H-ideal: " + check.witness);
  return out;
}

HIdeal h_ideal_generated(const HModuleAlgebra& m, const Element& a) {
  return h_ideal_generated(m, Subspace::span(m.field(), {a}, m.dim()));
}

Subspace ideal_product(const FiniteDimAlgebra& a, const Subspace& i, const Subspace& j) {
  return subspace_product(a, i, j);
}

Subspace ideal_power(const FiniteDimAlgebra& a, const Subspace& i, std::size_t n) {
  if (n == 0) throw PreconditionFailed("ideal_power: exponent must be at least 1");
  Subspace p = i;
  for (std::size_t k = 1; k < n; ++k) {
    p = subspace_product(a, p, i);
    if (p.is_zero()) break;
  }
  return p;
}

Nilpotency nilpotency_index(const FiniteDimAlgebra& a, const Subspace& i) {
  Subspace p = i;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (p.is_zero()) return {true, k};
    Subspace next = subspace_product(a, p, i);
    if (next == p) return {false, 0};
    p = std::move(next);
  }
  return {p.is_zero(), p.is_zero() ? a.dim() + 2 : 0};
}

Annihilators h_annihilators(const HModuleAlgebra& m, const HIdeal& i) {
  const std::size_t n = m.dim();
  const Field& f = m.field();
  std::vector<Matrix> acts;
  for (const auto& h : m.hopf_basis()) acts.push_back(m.action_matrix(h));
  // a -> (h·a)u and a -> u(h·a), one block of n rows per (h, u).
  const std::size_t blocks = acts.size() * std::max<std::size_t>(i.dim(), 1);
  Matrix left_sys(f, blocks * n, n);
  Matrix right_sys(f, blocks * n, n);
  std::size_t blk = 0;
  for (const auto& a : acts)
    for (const auto& u : i.basis()) {
      Matrix l = m.algebra.right_mult(u) * a;
      Matrix r = m.algebra.left_mult(u) * a;
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t c = 0; c < n; ++c) {
          left_sys(blk * n + row, c) = l(row, c);
          right_sys(blk * n + row, c) = r(row, c);
        }
      ++blk;
    }
  Annihilators out;
  out.left = Subspace::span(f, kernel_basis(left_sys), n);
  out.right = Subspace::span(f, kernel_basis(right_sys), n);
  out.star = intersect(out.left, out.right);
  return out;
}

HIdeal h_annihilator_star(const HModuleAlgebra& m, const HIdeal& i) {
  HIdeal star = h_annihilators(m, i).star;
  auto check = is_h_ideal(m, star);
  if (!check.holds) throw Contradiction("I* is not an H-ideal: " + check.witness);
  return star;
}

std::vector<Subspace> enumerate_ideals(const FiniteDimAlgebra& a, const EnumerationLimits& limits) {
  auto all = enumerate_subspaces(a.dim(), a.field(), limits);
  return par::filter_subspaces(all, [&](const Subspace& s) { return is_ideal(a, s); });
}

std::vector<HIdeal> enumerate_h_ideals(const HModuleAlgebra& m, const EnumerationLimits& limits) {
  auto all = enumerate_subspaces(m.dim(), m.field(), limits);
  return par::filter_subspaces(all, [&](const Subspace& s) { return is_h_ideal(m, s).holds; });
}

HIdeal least_h_ideal_containing(const std::vector<HIdeal>& ideals, const Subspace& e) {
  std::optional<HIdeal> best;
  for (const auto& i : ideals) {
    if (!e.is_subspace_of(i)) continue;
    if (!best) {
      best = i;
    } else {
      best = intersect(*best, i);
    }
  }
  if (!best) throw PreconditionFailed("no enumerated H-ideal contains E");
  return *best;
}

std::vector<Matrix> operator_generators(const HModuleAlgebra& m) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Element e = m.algebra.basis_vector(i);
    gens.push_back(m.algebra.left_mult(e));
    gens.push_back(m.algebra.right_mult(e));
  }
  for (const auto& h : m.hopf_basis()) gens.push_back(m.action_matrix(h));
  return gens;
}

namespace {

// Scale so that the first nonzero entry is 1.
Vector normalize(Vector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == v.end()) return v;
  Scalar inv = lead->inverse();
  for (auto& s : v) s *= inv;
  return v;
}

Verdict refuted(std::string method, Subspace witness, std::string detail) {
  Verdict v;
  v.truth = Truth::no;
  v.certified = true;
  v.method = std::move(method);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

bool within_cap(std::size_t n, const Field& f, std::uint64_t cap) {
  if (!f.is_prime_field()) return false;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > cap / f.characteristic()) return false;
    size *= f.characteristic();
  }
  return size <= cap;
}

// Eigenvalues of c lying in the base field.
std::vector<Scalar> base_field_roots(const Poly& f, std::mt19937_64& rng) {
  if (f.field.is_rational()) return poly::rational_roots(f);
  std::vector<Scalar> roots;
  for (const auto& g : poly::factor_squarefree_fp(poly::divmod(f, poly::gcd(f, poly::derivative(f))).first.monic(),
                                                  rng)) {
    if (g.degree() == 1) roots.push_back(-g.c[0]);
  }
  return roots;
}

}  // namespace

std::vector<Element> sweep_vectors(const Field& f, std::size_t n, const SearchOptions& opts) {
  std::vector<Element> out;
  std::set<Vector> seen;
  auto add = [&](Vector v) {
    if (vec::is_zero(v)) return;
    v = normalize(std::move(v));
    if (seen.insert(v).second) out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) add(vec::unit(f, n, i));
  if (n <= 6) {
    std::vector<int> digits(n, -1);
    for (;;) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(digits[i]);
      add(std::move(v));
      std::size_t i = n;
      while (i > 0 && digits[i - 1] == 1) digits[--i] = -1;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t t = 0; t < opts.random_trials; ++t) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(dist(rng));
    add(std::move(v));
  }
  return out;
}

Verdict is_h_simple(const HModuleAlgebra& m, const SearchOptions& opts) {
  const std::size_t n = m.dim();
  const Field& f = m.field();
  if (n == 0) return refuted("square", Subspace::zero(f, 0), "R = 0");
  const Subspace whole = Subspace::full(f, n);
  if (subspace_product(m.algebra, whole, whole).is_zero()) {
    return refuted("square", Subspace::zero(f, n), "R^2 = 0");
  }

  if (within_cap(n, f, opts.limits.cap)) {
    for (const auto& v : enumerate_projective_points(n, f, opts.limits.cap)) {
      HIdeal gen = h_ideal_generated(m, v);
      if (!gen.is_full()) return refuted("exhaustive", gen, "(" + vec::to_string(v) + ") is a proper H-ideal");
    }
    Verdict v;
    v.truth = Truth::yes;
    v.certified = true;
    v.method = "exhaustive";
    v.detail = "every nonzero vector generates R";
    return v;
  }

  for (const auto& v : sweep_vectors(f, n, opts)) {
    HIdeal gen = h_ideal_generated(m, v);
    if (!gen.is_full()) return refuted("sweep", gen, "(" + vec::to_string(v) + ") is a proper H-ideal");
  }

  if (!trace_radical_applies(f, n)) {
    Verdict v;
    v.truth = Truth::unknown;
    v.method = "sweep";
    v.detail = "no proper H-ideal found; operator-algebra certificate needs p > dim R";
    return v;
  }

  auto gens = operator_generators(m);
  auto algebra = matrix_algebra_closure(f, n, gens);
  auto rad = trace_radical(f, n, algebra);
  if (!rad.empty()) {
    Subspace w = joint_image(f, n, rad);
    if (w.is_zero() || w.is_full() || !is_h_ideal(m, w).holds) {
      throw Contradiction("is_h_simple: rad of the operator algebra does not give a proper H-ideal");
    }
    return refuted("operator-radical", w, "rad(A)R is a proper H-ideal");
  }
  auto comm = commutant(f, n, gens);
  if (comm.size() == 1) {
    Verdict v;
    v.truth = Truth::yes;
    v.certified = true;
    v.method = "operator-commutant";
    v.detail = "operator algebra semisimple with one-dimensional commutant";
    return v;
  }

  // A commuting operator that is not invertible has an H-stable kernel.
  std::vector<Matrix> candidates = comm;
  for (std::size_t i = 0; i < comm.size(); ++i)
    for (std::size_t j = i + 1; j < comm.size(); ++j) candidates.push_back(comm[i] + comm[j]);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t t = 0; t < 16; ++t) {
    Matrix c(f, n, n);
    for (const auto& b : comm) c = c + b.scaled(f.from_int(dist(rng)));
    candidates.push_back(std::move(c));
  }
  const Matrix id = Matrix::identity(f, n);
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    Poly mp = poly::minimal_polynomial(c);
    if (mp.degree() == 1) continue;  // scalar operator
    for (const auto& lambda : base_field_roots(mp, rng)) {
      Subspace k = Subspace::span(f, kernel_basis(c - id.scaled(lambda)), n);
      if (k.is_zero() || k.is_full()) continue;
      if (!is_h_ideal(m, k).holds) throw Contradiction("is_h_simple: eigenspace of a commuting operator is not H-stable");
      return refuted("operator-commutant", k, "eigenspace of a commuting operator");
    }
  }
  Verdict v;
  v.truth = Truth::yes;
  v.certified = false;
  v.method = "sweep";
  v.detail = "no proper H-ideal found; commutant has dimension " + std::to_string(comm.size());
  return v;
}

}  // namespace hopfrad
