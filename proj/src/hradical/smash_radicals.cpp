#include <algorithm>

#include "hopfrad/errors.hpp"
#include "hopfrad/radicals.hpp"
#include "hopfrad/smash.hpp"
#include "hopfrad/wedderburn.hpp"

namespace hopfrad {

namespace {

bool within_cap(const HModuleAlgebra& m, const EnumerationLimits& limits) {
  if (!m.field().is_prime_field()) return false;
  try {
    check_enumerable(m.dim(), m.field(), limits);
    return true;
  } catch (const CapExceeded&) {
    return false;
  }
}

}  // namespace

Subspace smash_radical_restricted(const HModuleAlgebra& m, const NilradicalOptions& nil) {
  FiniteDimAlgebra a = smash_product(m);
  return pull_back_to_algebra(m, nilradical(a, nil));
}

RadicalResult h_jacobson_radical(const HModuleAlgebra& m, const RadicalOptions& opts) {
  if (!m.algebra.unit()) throw PreconditionFailed("h_jacobson_radical needs R to have a unit");
  FiniteDimAlgebra a = smash_product(m);
  WedderburnDecomposition w = wedderburn(a, opts.nil, opts.search.seed);
  RadicalResult r;
  r.name = "r_Hj";
  r.method = "smash-wedderburn";
  r.certificates.push_back("dim R#H = " + std::to_string(a.dim()));
  r.certificates.push_back("dim rad(R#H) = " + std::to_string(w.radical.dim()));
  for (const auto& note : w.notes) r.certificates.push_back("rad(R#H): " + note);
  Subspace ann = Subspace::full(m.field(), a.dim());
  std::size_t counted = 0;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    // R acts nonzero on the simple module of block i iff e_i (R#1) ≠ 0.
    bool acts = false;
    for (std::size_t rr = 0; rr < m.dim() && !acts; ++rr) {
      Vector img = project_to_quotient(w.radical, embed_algebra(m, m.algebra.basis_vector(rr)));
      acts = !vec::is_zero(w.semisimple.multiply(w.idempotents[i], img));
    }
    if (!acts) continue;
    ++counted;
    ann = intersect(ann, block_kernel(w, i));
  }
  r.certificates.push_back("simple blocks " + std::to_string(w.blocks.size()) + ", with R acting nonzero " +
                           std::to_string(counted));
  r.space = pull_back_to_algebra(m, ann);
  Subspace direct = pull_back_to_algebra(m, w.radical);
  if (direct != r.space) throw Contradiction("r_Hj differs from rad(R#H) ∩ R for unital R");
  return r;
}

bool is_normalized_integral(const HopfAlgebraData& h, const Element& t) {
  if (t.size() != h.dim()) return false;
  if (!h.counit_of(t).is_one()) return false;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (h.algebra.multiply(h.algebra.basis_vector(i), t) != vec::scale(h.counit[i], t)) return false;
  }
  return true;
}

Subspace gt_subspace(const HModuleAlgebra& m, const Element& t, const Element& a) {
  if (!is_normalized_integral(m.hopf, t)) throw PreconditionFailed("gt_subspace: t is not a normalized left integral");
  const std::size_t n = m.dim();
  Element ta = m.act(t, a);
  std::vector<Vector> span;
  for (std::size_t c = 0; c < n; ++c) {
    Element x = m.algebra.basis_vector(c);
    span.push_back(vec::add(x, m.algebra.multiply(ta, x)));
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      Element eu = m.algebra.basis_vector(u);
      Element ev = m.algebra.basis_vector(v);
      span.push_back(vec::add(m.algebra.multiply(m.algebra.multiply(eu, ta), ev), m.algebra.basis_product(u, v)));
    }
  return Subspace::span(m.field(), span, n);
}

bool gt_member(const HModuleAlgebra& m, const Element& t, const Element& a) { return gt_subspace(m, t, a).contains(a); }

RadicalResult gt_radical(const HModuleAlgebra& m, const Element& t, const RadicalOptions& opts) {
  if (!is_normalized_integral(m.hopf, t)) throw PreconditionFailed("gt_radical: t is not a normalized left integral");
  if (!within_cap(m, opts.search.limits)) throw Unsupported("gt_radical needs a prime field within the enumeration cap");
  auto ideals = enumerate_h_ideals(m, opts.search.limits);
  auto in_class = [&](const Subspace& i) {
    for (const auto& a : enumerate_elements(i, opts.search.limits.cap)) {
      if (!gt_member(m, t, a)) return false;
    }
    return true;
  };
  RadicalResult r;
  r.name = "r_gt";
  r.method = "enumeration";
  r.space = Subspace::zero(m.field(), m.dim());
  std::size_t members = 0;
  for (const auto& i : ideals) {
    if (!in_class(i)) continue;
    ++members;
    r.space = sum(r.space, i);
  }
  if (!in_class(r.space)) throw Contradiction("sum of G_t-regular H-ideals is not G_t-regular");
  r.certificates.push_back(std::to_string(members) + " of " + std::to_string(ideals.size()) +
                           " H-ideals are G_t-regular");
  r.certificates.push_back("t = " + vec::to_string(t));
  return r;
}

Subspace brown_mccoy_classical(const FiniteDimAlgebra& a, const RadicalOptions& opts) {
  WedderburnDecomposition w = wedderburn(a, opts.nil, opts.search.seed);
  Subspace out = Subspace::full(a.field(), a.dim());
  for (std::size_t i = 0; i < w.blocks.size(); ++i) out = intersect(out, block_kernel(w, i));
  return out;
}

RadicalResult h_brown_mccoy_radical(const HModuleAlgebra& m, const RadicalOptions& opts) {
  WedderburnDecomposition w = wedderburn(m.algebra, opts.nil, opts.search.seed);
  std::vector<Subspace> candidates;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    Subspace p = colon_ideal(m, block_kernel(w, i));
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
  }
  std::sort(candidates.begin(), candidates.end());
  RadicalResult r;
  r.name = "r_Hbm";
  r.method = "maximal-h-ideals";
  r.space = Subspace::full(m.field(), m.dim());
  std::size_t kept = 0;
  for (const auto& p : candidates) {
    bool maximal = std::none_of(candidates.begin(), candidates.end(),
                                [&](const Subspace& q) { return q != p && p.is_subspace_of(q); });
    if (!maximal) continue;
    HModuleAlgebra q = quotient_action(m, p);
    if (!find_unit(q.algebra)) {
      r.certificates.push_back("(M:H) of dim " + std::to_string(p.dim()) + " rejected: quotient has no unit");
      continue;
    }
    Verdict simple = is_h_simple(q, opts.search);
    if (simple.truth == Truth::no) {
      throw Contradiction("R/(M:H) for a maximal candidate is not H-simple: " + simple.detail);
    }
    r.certificates.push_back("R/P H-simple with unit for P of dim " + std::to_string(p.dim()) + " (is_h_simple: " +
                             to_string(simple.truth) + (simple.certified ? ", certified" : ", uncertified") + ", " +
                             simple.method + ")");
    r.space = intersect(r.space, p);
    ++kept;
  }
  if (kept == 0) r.certificates.push_back("no H-simple unital quotient; radical is R");
  return r;
}

FisherBase parse_fisher_base(const std::string& s) {
  if (s == "baer") return FisherBase::baer;
  if (s == "jacobson") return FisherBase::jacobson;
  if (s == "locnil") return FisherBase::locnil;
  if (s == "brownmccoy") return FisherBase::brownmccoy;
  throw ParseError("unknown base radical '" + s + "' (expected baer, jacobson, locnil or brownmccoy)");
}

std::string to_string(FisherBase b) {
  switch (b) {
    case FisherBase::baer:
      return "baer";
    case FisherBase::jacobson:
      return "jacobson";
    case FisherBase::locnil:
      return "locnil";
    case FisherBase::brownmccoy:
      return "brownmccoy";
  }
  return "baer";
}

RadicalResult fisher_radical(const HModuleAlgebra& m, FisherBase base, const RadicalOptions& opts) {
  RadicalResult r;
  r.name = "fisher:" + to_string(base);
  Subspace classical;
  if (base == FisherBase::brownmccoy) {
    classical = brown_mccoy_classical(m.algebra, opts);
    r.method = "colon-of-classical-brown-mccoy";
  } else {
    auto nr = compute_nilradical(m.algebra, opts.nil);
    classical = nr.space;
    r.method = "colon-of-nilradical";
    for (const auto& note : nr.notes) r.certificates.push_back(note);
  }
  r.certificates.push_back("dim r(R) = " + std::to_string(classical.dim()));
  r.space = colon_ideal(m, classical);
  return r;
}

RadicalResult h_locally_nilpotent_radical(const HModuleAlgebra& m, const RadicalOptions& opts) {
  RadicalResult r;
  r.name = "r_Hl";
  r.method = "colon-of-nilradical";
  auto nr = compute_nilradical(m.algebra, opts.nil);
  r.space = colon_ideal(m, nr.space);
  for (const auto& note : nr.notes) r.certificates.push_back(note);
  r.certificates.push_back("locally nilpotent radical of a finite-dimensional algebra is its nilradical");
  BaerChain bc = baer_chain(m, opts.nil);
  const Subspace& n1 = bc.chain.size() > 1 ? bc.chain[1] : bc.chain[0];
  if (n1 != r.space) throw Contradiction("r_Hl differs from N_1 of the Baer chain");
  r.certificates.push_back("equals N_1 of the Baer chain");
  return r;
}

}  // namespace hopfrad
