#include "hopfrad/oracle.hpp"

#include <algorithm>
#include <functional>

#include "hopfrad/errors.hpp"
#include "hopfrad/membership.hpp"

namespace hopfrad {

namespace {

Subspace sum_of(const HModuleAlgebra& m, const std::vector<HIdeal>& ideals, const std::function<bool(const HIdeal&)>& keep) {
  Subspace out = Subspace::zero(m.field(), m.dim());
  for (const auto& i : ideals) {
    if (keep(i)) out = sum(out, i);
  }
  return out;
}

Subspace span_of(const Field& f, std::size_t n, const std::vector<Element>& elems) { return Subspace::span(f, elems, n); }

}  // namespace

Subspace brute_brown_mccoy(const HModuleAlgebra& m, const std::vector<HIdeal>& h_ideals) {
  const Subspace whole = Subspace::full(m.field(), m.dim());
  const Subspace square = subspace_product(m.algebra, whole, whole);
  Subspace out = whole;
  for (const auto& p : h_ideals) {
    if (p.is_full()) continue;
    bool maximal = std::none_of(h_ideals.begin(), h_ideals.end(), [&](const HIdeal& q) {
      return !q.is_full() && q != p && p.is_subspace_of(q);
    });
    if (!maximal || square.is_subspace_of(p)) continue;
    if (!find_unit(quotient_algebra(m.algebra, p))) continue;
    out = intersect(out, p);
  }
  return out;
}

OracleReport run_oracle(const HModuleAlgebra& m, const RadicalOptions& opts) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (!f.is_prime_field()) throw PreconditionFailed("the oracle needs a prime field");
  check_enumerable(n, f, opts.search.limits);

  OracleReport rep;
  rep.h_ideals = enumerate_h_ideals(m, opts.search.limits);
  const auto& ideals = rep.h_ideals;

  auto record = [&](const std::string& name, const std::function<Subspace()>& fast, const std::function<Subspace()>& brute) {
    OracleEntry e;
    e.name = name;
    try {
      e.fast = fast();
      e.brute = brute();
      e.available = true;
      e.match = e.fast == e.brute;
      if (!e.match) {
        rep.diffs.push_back(name + ": fast dim " + std::to_string(e.fast.dim()) + " vs brute dim " +
                            std::to_string(e.brute.dim()));
      }
    } catch (const Contradiction& ex) {
      e.blocked_by = std::string("contradiction: ") + ex.what();
      rep.diffs.push_back(name + ": " + e.blocked_by);
    } catch (const Error& ex) {
      e.blocked_by = ex.what();
    }
    rep.entries.push_back(std::move(e));
  };

  RadicalOptions fast_opts = opts;
  fast_opts.enumeration_cross_check = false;

  const Subspace nil_brute = nilradical_exhaustive(m.algebra, opts.search.limits);
  const Subspace nilpotent_sum =
      sum_of(m, ideals, [&](const HIdeal& i) { return nilpotency_index(m.algebra, i).nilpotent; });

  record("nilradical", [&] { return nilradical(m.algebra, opts.nil); }, [&] { return nil_brute; });
  record("r_Hb", [&] { return baer_chain(m, opts.nil).tau; }, [&] { return semiprime_intersection(m, ideals); });
  record(
      "W_H", [&] { return baer_chain(m, opts.nil).tau; },
      [&] {
        auto w = exact_m_nilpotent_elements(m, std::nullopt, opts.search.limits.cap);
        Subspace s = span_of(f, n, w);
        if (w.size() != enumerate_elements(s, opts.search.limits.cap).size()) {
          throw Contradiction("W_H is not a subspace");
        }
        return s;
      });
  record(
      "W_L", [&] { return baer_chain(m, opts.nil).tau; },
      [&] {
        auto w = exact_m_nilpotent_elements(m, m.hopf_basis(), opts.search.limits.cap);
        Subspace s = span_of(f, n, w);
        if (w.size() != enumerate_elements(s, opts.search.limits.cap).size()) {
          throw Contradiction("W_L is not a subspace");
        }
        return s;
      });
  record("r_Hl", [&] { return h_locally_nilpotent_radical(m, fast_opts).space; }, [&] { return nilpotent_sum; });
  record("r_Hj", [&] { return h_jacobson_radical(m, fast_opts).space; }, [&] { return nilpotent_sum; });
  const Subspace bm_brute = brute_brown_mccoy(m, ideals);
  record("r_Hbm", [&] { return h_brown_mccoy_radical(m, fast_opts).space; }, [&] { return bm_brute; });
  record(
      "r_gt",
      [&] {
        auto t = normalized_integral(m.hopf);
        if (!t) throw Unsupported("H has no normalized left integral");
        return gt_radical(m, *t, fast_opts).space;
      },
      [&] { return bm_brute; });
  for (auto base : {FisherBase::baer, FisherBase::jacobson, FisherBase::locnil}) {
    record("fisher:" + to_string(base), [&] { return fisher_radical(m, base, fast_opts).space; },
           [&] { return sum_of(m, ideals, [&](const HIdeal& i) { return i.is_subspace_of(nil_brute); }); });
  }
  record("fisher:brownmccoy", [&] { return fisher_radical(m, FisherBase::brownmccoy, fast_opts).space; },
         [&] {
           auto all = enumerate_ideals(m.algebra, opts.search.limits);
           const Subspace whole = Subspace::full(f, n);
           const Subspace square = subspace_product(m.algebra, whole, whole);
           Subspace bm = whole;
           for (const auto& i : all) {
             if (i.is_full() || square.is_subspace_of(i)) continue;
             bool maximal = std::none_of(all.begin(), all.end(),
                                         [&](const Subspace& q) { return !q.is_full() && q != i && i.is_subspace_of(q); });
             if (maximal && find_unit(quotient_algebra(m.algebra, i))) bm = intersect(bm, i);
           }
           return sum_of(m, ideals, [&](const HIdeal& i) { return i.is_subspace_of(bm); });
         });

  // H-simplicity as a yes/no subspace: R when H-simple, 0 otherwise.
  const Subspace whole = Subspace::full(f, n);
  const Subspace zero = Subspace::zero(f, n);
  record(
      "h-simple",
      [&] {
        Verdict v = is_h_simple(m, opts.search);
        if (v.truth == Truth::unknown) throw Unsupported("is_h_simple undecided");
        return v.truth == Truth::yes ? whole : zero;
      },
      [&] {
        bool simple = ideals.size() == 2 && !subspace_product(m.algebra, whole, whole).is_zero();
        return simple ? whole : zero;
      });
  return rep;
}

}  // namespace hopfrad
