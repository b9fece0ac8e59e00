#include <algorithm>

#include "hopfrad/errors.hpp"
#include "hopfrad/kernels.hpp"
#include "hopfrad/radicals.hpp"

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

// Some power of K lies in I (K ⊇ I both ideals).
bool nilpotent_modulo(const FiniteDimAlgebra& a, const Subspace& k, const Subspace& i) {
  Subspace q = sum(k, i);
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    if (q == i) return true;
    Subspace next = sum(subspace_product(a, q, k), i);
    if (next == q) return false;
    q = std::move(next);
  }
  return q == i;
}

}  // namespace

BaerChain baer_chain(const HModuleAlgebra& m, const NilradicalOptions& nil) {
  BaerChain bc;
  Subspace current = Subspace::zero(m.field(), m.dim());
  bc.chain.push_back(current);
  for (std::size_t step = 0;; ++step) {
    HModuleAlgebra q = quotient_action(m, current);
    auto nr = compute_nilradical(q.algebra, nil);
    for (const auto& note : nr.notes) bc.notes.push_back(note);
    Subspace next = preimage(current, colon_ideal(q, nr.space));
    if (next == current) break;
    if (step >= 1) throw Contradiction("Baer chain did not stabilize at N_1");
    bc.chain.push_back(next);
    current = std::move(next);
  }
  bc.tau = current;
  return bc;
}

Subspace semiprime_intersection(const HModuleAlgebra& m, const std::vector<HIdeal>& h_ideals) {
  Subspace out = Subspace::full(m.field(), m.dim());
  for (const auto& i : h_ideals) {
    bool semiprime = true;
    for (const auto& k : h_ideals) {
      if (k == i || !i.is_subspace_of(k)) continue;
      if (nilpotent_modulo(m.algebra, k, i)) {
        semiprime = false;
        break;
      }
    }
    if (semiprime) out = intersect(out, i);
  }
  return out;
}

RadicalResult h_baer_radical(const HModuleAlgebra& m, const RadicalOptions& opts) {
  BaerChain bc = baer_chain(m, opts.nil);
  RadicalResult r;
  r.name = "r_Hb";
  r.space = bc.tau;
  r.method = "baer-chain";
  r.certificates.push_back("chain length " + std::to_string(bc.chain.size()));
  auto nil = nilpotency_index(m.algebra, bc.tau);
  if (!nil.nilpotent) throw Contradiction("N_tau is not nilpotent");
  r.certificates.push_back("N_tau nilpotent of index " + std::to_string(nil.index));
  for (const auto& note : bc.notes) r.certificates.push_back(note);
  if (opts.enumeration_cross_check && within_cap(m, opts.search.limits)) {
    auto ideals = enumerate_h_ideals(m, opts.search.limits);
    Subspace brute = semiprime_intersection(m, ideals);
    if (brute != bc.tau) throw Contradiction("N_tau differs from the intersection of H-semiprime H-ideals");
    r.certificates.push_back("equals intersection of H-semiprime H-ideals (" + std::to_string(ideals.size()) +
                             " H-ideals enumerated)");
  }
  return r;
}

bool is_h_semiprime(const HModuleAlgebra& m, const RadicalOptions& opts) { return h_baer_radical(m, opts).space.is_zero(); }

Verdict is_h_prime(const HModuleAlgebra& m, const RadicalOptions& opts) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  Verdict v;
  if (n == 0) {
    v.truth = Truth::no;
    v.certified = true;
    v.method = "trivial";
    v.detail = "R = 0";
    return v;
  }
  auto refute = [&](std::string method, Subspace w, std::string detail) {
    v.truth = Truth::no;
    v.certified = true;
    v.method = std::move(method);
    v.witness = std::move(w);
    v.detail = std::move(detail);
    return v;
  };

  if (within_cap(m, opts.search.limits)) {
    auto points = enumerate_projective_points(n, f, opts.search.limits.cap);
    std::vector<Subspace> images;
    for (const auto& p : points) images.push_back(h_image(m, p));
    if (auto pair = par::first_annihilating_pair(m.algebra, images)) {
      const auto& a = points[pair->first];
      const auto& b = points[pair->second];
      return refute("exhaustive", h_ideal_generated(m, a),
                    "(H.a)R(H.b) = 0 for a = " + vec::to_string(a) + ", b = " + vec::to_string(b));
    }
    v.truth = Truth::yes;
    v.certified = true;
    v.method = "exhaustive";
    v.detail = "no pair of nonzero vectors with (H.a)R(H.b) = 0";
    return v;
  }

  Subspace tau = baer_chain(m, opts.nil).tau;
  if (!tau.is_zero()) {
    auto nil = nilpotency_index(m.algebra, tau);
    Subspace w = ideal_power(m.algebra, tau, nil.index - 1);
    return refute("nilpotent-h-ideal", w, "N_tau^(k-1) R N_tau = 0 with k = " + std::to_string(nil.index));
  }
  auto sweep = sweep_vectors(f, n, opts.search);
  std::vector<Subspace> images;
  for (const auto& s : sweep) images.push_back(h_image(m, s));
  if (auto pair = par::first_annihilating_pair(m.algebra, images)) {
    const auto& a = sweep[pair->first];
    const auto& b = sweep[pair->second];
    return refute("sweep", h_ideal_generated(m, a),
                  "(H.a)R(H.b) = 0 for a = " + vec::to_string(a) + ", b = " + vec::to_string(b));
  }
  std::vector<Subspace> gens;
  for (const auto& s : sweep) {
    Subspace g = h_ideal_generated(m, s);
    if (!g.is_full() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  for (const auto& b : gens)
    for (const auto& c : gens) {
      if (ideal_product(m.algebra, b, c).is_zero()) return refute("sweep", b, "product of two nonzero H-ideals is 0");
    }
  Verdict simple = is_h_simple(m, opts.search);
  if (simple.truth == Truth::yes && simple.certified) {
    v.truth = Truth::yes;
    v.certified = true;
    v.method = "h-simple";
    v.detail = "R is H-simple (" + simple.method + ")";
    return v;
  }
  v.truth = Truth::unknown;
  v.method = "sweep";
  v.detail = "no zero product found among swept H-ideals";
  return v;
}

}  // namespace hopfrad
