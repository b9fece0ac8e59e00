#include "hopfrad/wedderburn.hpp"

#include <algorithm>
#include <random>

#include "hopfrad/errors.hpp"
#include "hopfrad/poly.hpp"

namespace hopfrad {

namespace {

struct Factorization {
  std::vector<Poly> factors;  ///< pairwise coprime, product = f
  bool known = false;         ///< false when Q-factoring could not decide
};

Factorization split_factors(const Poly& f, std::mt19937_64& rng) {
  Factorization out;
  if (f.field.is_prime_field()) {
    if (poly::gcd(f, poly::derivative(f)).degree() > 0) {
      throw Contradiction("central element of a semisimple algebra has a non-squarefree minimal polynomial");
    }
    out.factors = poly::factor_squarefree_fp(f, rng);
    out.known = true;
    return out;
  }
  auto roots = poly::rational_roots(f);
  Poly rest = f;
  for (const auto& r : roots) {
    Poly lin = Poly::linear(f.field, r);
    out.factors.push_back(lin);
    rest = poly::divmod(rest, lin).first;
  }
  if (rest.degree() > 0) out.factors.push_back(rest.monic());
  out.known = out.factors.size() >= 2 || f.degree() <= 3;
  return out;
}

Subspace times_center(const FiniteDimAlgebra& s, const std::vector<Element>& zs, const Element& e) {
  std::vector<Vector> rows;
  for (const auto& z : zs) rows.push_back(s.multiply(z, e));
  return Subspace::span(s.field(), rows, s.dim());
}

}  // namespace

Subspace center(const FiniteDimAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix sys(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Element e = a.basis_vector(i);
    Matrix d = a.right_mult(e) - a.left_mult(e);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(i * n + r, c) = d(r, c);
  }
  return Subspace::span(a.field(), kernel_basis(sys), n);
}

WedderburnDecomposition wedderburn(const FiniteDimAlgebra& a, const NilradicalOptions& nil, std::uint64_t seed) {
  WedderburnDecomposition w;
  auto nr = compute_nilradical(a, nil);
  w.radical = nr.space;
  w.notes = nr.notes;
  w.semisimple = quotient_algebra(a, w.radical);
  const FiniteDimAlgebra& s = w.semisimple;
  const Field& f = s.field();
  if (s.dim() == 0) return w;

  std::optional<Element> unit = s.unit();
  if (!unit) unit = find_unit(s);
  if (!unit) throw Contradiction("A/J has no unit although it is semisimple");

  const auto zs = center(s).basis();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Element> work{*unit};
  while (!work.empty()) {
    Element e = std::move(work.back());
    work.pop_back();
    Subspace ez = times_center(s, zs, e);
    if (ez.dim() == 1) {
      w.idempotents.push_back(e);
      continue;
    }
    std::vector<Element> candidates;
    for (const auto& z : zs) candidates.push_back(s.multiply(z, e));
    for (int t = 0; t < 48; ++t) {
      Element c = s.zero();
      for (const auto& z : zs) vec::axpy(c, f.from_int(coef(rng)), z);
      candidates.push_back(s.multiply(c, e));
    }
    bool split = false;
    bool simple = false;
    for (const auto& u : candidates) {
      Poly mp = poly::minimal_polynomial(s, u, e);
      Factorization fac = split_factors(mp, rng);
      if (fac.factors.size() >= 2) {
        Element total = s.zero();
        for (const auto& g : fac.factors) {
          Poly h = poly::divmod(mp, g).first;
          auto eg = poly::ext_gcd(h, g);
          if (eg.g.degree() != 0) throw Contradiction("wedderburn: factors are not coprime");
          Poly sel = poly::mod(poly::mul(eg.s, h), mp);
          Element idem = poly::evaluate(s, sel, u, e);
          if (s.multiply(idem, idem) != idem) throw Contradiction("wedderburn: split element is not idempotent");
          vec::axpy(total, f.one(), idem);
          work.push_back(std::move(idem));
        }
        if (total != e) throw Contradiction("wedderburn: split idempotents do not sum to e");
        split = true;
        break;
      }
      if (fac.known && mp.degree() == static_cast<long>(ez.dim())) {
        simple = true;
        break;
      }
    }
    if (split) continue;
    if (!simple) {
      throw Unsupported("non-split semisimple quotient: cannot decide whether a block of dimension " +
                        std::to_string(ez.dim()) + " over its centre is simple over " + f.name());
    }
    w.idempotents.push_back(e);
  }
  std::sort(w.idempotents.begin(), w.idempotents.end());
  for (const auto& e : w.idempotents) {
    std::vector<Vector> rows;
    for (std::size_t b = 0; b < s.dim(); ++b) rows.push_back(s.multiply(e, s.basis_vector(b)));
    w.blocks.push_back(Subspace::span(f, rows, s.dim()));
  }
  return w;
}

Subspace block_kernel(const WedderburnDecomposition& w, std::size_t i) {
  if (i >= w.blocks.size()) throw PreconditionFailed("block_kernel: block index out of range");
  Subspace others = Subspace::zero(w.semisimple.field(), w.semisimple.dim());
  for (std::size_t j = 0; j < w.blocks.size(); ++j) {
    if (j != i) others = sum(others, w.blocks[j]);
  }
  return preimage(w.radical, others);
}

}  // namespace hopfrad
