#include "hopfrad/membership.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "hopfrad/errors.hpp"
#include "hopfrad/kernels.hpp"
#include "hopfrad/radicals.hpp"

namespace hopfrad {

namespace {

Vector normalized(Vector v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == v.end()) return v;
  Scalar inv = lead->inverse();
  for (auto& s : v) s *= inv;
  return v;
}

Element step_value(const HModuleAlgebra& m, const Element& a, const MStep& s) {
  return m.algebra.multiply(m.algebra.multiply(m.act(s.h, a), s.b), m.act(s.h_prime, a));
}

std::vector<Element> acting_elements(const HModuleAlgebra& m, const std::optional<std::vector<Element>>& l) {
  if (!l) return m.hopf_basis();
  if (l->empty()) throw PreconditionFailed("L must be non-empty");
  for (const auto& h : *l) {
    if (h.size() != m.hopf_dim()) throw DimensionMismatch("element of L has the wrong length");
  }
  if (!Subspace::span(m.field(), *l, m.hopf_dim()).is_full()) throw PreconditionFailed("span(L) != H");
  return *l;
}

}  // namespace

bool MSequence::consistent(const HModuleAlgebra& m) const {
  if (values.empty() || values[0] != start || values.size() != steps.size() + 1) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (step_value(m, values[i], steps[i]) != values[i + 1]) return false;
  }
  return true;
}

std::string to_string(MVerdict v) {
  switch (v) {
    case MVerdict::nilpotent:
      return "nilpotent";
    case MVerdict::not_nilpotent:
      return "not-nilpotent";
    case MVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

MembershipResult wh_membership(const HModuleAlgebra& m, const Element& a, const std::optional<std::vector<Element>>& l,
                               const MembershipOptions& opts) {
  if (a.size() != m.dim()) throw DimensionMismatch("wh_membership: element length");
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const std::vector<Element> hs = acting_elements(m, l);
  const Subspace tau = opts.tau ? *opts.tau : baer_chain(m).tau;
  const Subspace whole = Subspace::full(f, n);

  MembershipResult res;
  res.oracle_member = tau.contains(a);

  // Every value a_k of every sequence lies in V_k.
  {
    Subspace v = Subspace::span(f, {a}, n);
    std::vector<Subspace> seen;
    const std::size_t limit = 4 * (n + 1);
    for (std::size_t k = 1; k <= limit; ++k) {
      if (v.is_zero()) {
        res.over_approximation = MVerdict::nilpotent;
        res.over_approximation_bound = k;
        break;
      }
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) break;
      seen.push_back(v);
      Subspace x = act_image(m, hs, v);
      v = subspace_product(m.algebra, subspace_product(m.algebra, x, whole), x);
    }
  }

  // Random sequences; a nonzero value returning to an earlier line repeats
  // forever (the step map is homogeneous of degree 2).
  {
    std::mt19937_64 rng(opts.seed);
    const std::size_t depth = opts.depth ? opts.depth : 2 * n;
    std::uniform_int_distribution<std::size_t> pick_h(0, hs.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_b(0, n);
    MSequence longest;
    for (std::size_t trial = 0; trial < opts.trials && res.search == MVerdict::unknown; ++trial) {
      MSequence seq;
      seq.start = a;
      seq.values.push_back(a);
      std::set<Vector> lines;
      if (!vec::is_zero(a)) lines.insert(normalized(a));
      for (std::size_t s = 0; s < depth; ++s) {
        const Element& cur = seq.values.back();
        if (vec::is_zero(cur)) break;
        std::size_t bi = pick_b(rng);
        MStep step{hs[pick_h(rng)], bi == n ? cur : m.algebra.basis_vector(bi), hs[pick_h(rng)]};
        Element next = step_value(m, cur, step);
        seq.steps.push_back(std::move(step));
        seq.values.push_back(next);
        if (vec::is_zero(next)) break;
        if (!lines.insert(normalized(next)).second) {
          res.search = MVerdict::not_nilpotent;
          break;
        }
      }
      if (res.search == MVerdict::not_nilpotent || seq.steps.size() > longest.steps.size() || trial == 0) {
        longest = std::move(seq);
      }
    }
    res.trace = std::move(longest);
  }

  if (res.over_approximation == MVerdict::nilpotent && !res.oracle_member) {
    throw Contradiction("subspace iteration proves nilpotence of an element outside N_tau");
  }
  if (res.search == MVerdict::not_nilpotent && res.oracle_member) {
    throw Contradiction("found a non-terminating m-sequence from an element of N_tau");
  }
  if (res.oracle_member) {
    res.verdict = MVerdict::nilpotent;
    if (res.over_approximation == MVerdict::nilpotent) {
      res.bound = res.over_approximation_bound;
    } else {
      // a_k lies in N_tau^(2^(k-1)).
      auto idx = nilpotency_index(m.algebra, tau).index;
      std::size_t k = 1;
      while ((std::size_t{1} << (k - 1)) < idx) ++k;
      res.bound = k;
    }
    res.detail = "a lies in N_tau";
  } else {
    res.verdict = MVerdict::not_nilpotent;
    res.detail = "a lies outside N_tau";
  }
  return res;
}

std::vector<Element> exact_m_nilpotent_elements(const HModuleAlgebra& m, const std::optional<std::vector<Element>>& l,
                                                std::uint64_t cap) {
  const Field& f = m.field();
  if (!f.is_prime_field()) throw PreconditionFailed("exact W_H needs a prime field");
  const std::size_t n = m.dim();
  const auto elements = enumerate_vectors(n, f, cap);
  const std::optional<std::vector<Element>> lset = l ? std::optional(acting_elements(m, l)) : std::nullopt;

  auto successors = [&](std::size_t i) {
    std::vector<std::uint32_t> out;
    const Element& a = elements[i];
    if (vec::is_zero(a)) return out;
    std::vector<Element> xs;
    if (lset) {
      std::set<Vector> uniq;
      for (const auto& h : *lset) uniq.insert(m.act(h, a));
      xs.assign(uniq.begin(), uniq.end());
    } else {
      xs = enumerate_elements(h_image(m, a), cap);
    }
    std::set<std::uint32_t> succ;
    std::set<Subspace> done;
    for (const auto& x : xs) {
      if (vec::is_zero(x)) continue;
      for (const auto& y : xs) {
        if (vec::is_zero(y)) continue;
        std::vector<Vector> rows;
        for (std::size_t r = 0; r < n; ++r) rows.push_back(m.algebra.multiply(m.algebra.multiply(x, m.algebra.basis_vector(r)), y));
        Subspace img = Subspace::span(f, rows, n);
        if (img.is_zero() || !done.insert(img).second) continue;
        for (const auto& v : enumerate_elements(img, cap)) {
          if (!vec::is_zero(v)) succ.insert(static_cast<std::uint32_t>(vector_index(v)));
        }
      }
    }
    out.assign(succ.begin(), succ.end());
    return out;
  };
  auto graph = par::successor_sets(elements.size(), successors);

  std::vector<char> alive(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) alive[i] = !vec::is_zero(elements[i]);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!alive[i]) continue;
      bool keeps = std::any_of(graph[i].begin(), graph[i].end(), [&](std::uint32_t j) { return alive[j] != 0; });
      if (!keeps) {
        alive[i] = 0;
        changed = true;
      }
    }
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!alive[i]) out.push_back(elements[i]);
  }
  return out;
}

}  // namespace hopfrad
