#include <algorithm>
#include <functional>
#include <iterator>

#include "hopfrad/errors.hpp"
#include "hopfrad/membership.hpp"
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

std::string dims(const Subspace& a) { return "dim " + std::to_string(a.dim()); }

}  // namespace

bool ComparisonReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.status == "fail") return false;
  }
  return true;
}

ComparisonReport comparison_report(const HModuleAlgebra& m, const RadicalOptions& opts) {
  ComparisonReport rep;
  auto& entries = rep.radicals;
  auto attempt = [&](const std::string& name, const std::function<RadicalResult()>& fn) {
    RadicalEntry e;
    try {
      RadicalResult r = fn();
      e.available = true;
      e.space = r.space;
      e.method = r.method;
      e.certificates = r.certificates;
    } catch (const Contradiction& ex) {
      e.blocked_by = std::string("contradiction: ") + ex.what();
      rep.checks.push_back({"consistency " + name, "fail", ex.what()});
    } catch (const Error& ex) {
      e.blocked_by = ex.what();
    }
    entries[name] = std::move(e);
  };
  auto plain = [](std::string name, Subspace s, std::string method) {
    RadicalResult r;
    r.name = std::move(name);
    r.space = std::move(s);
    r.method = std::move(method);
    return r;
  };

  attempt("r_b", [&] {
    auto nr = compute_nilradical(m.algebra, opts.nil);
    auto r = plain("r_b", nr.space, "nilradical:" + to_string(nr.backend));
    r.certificates = nr.notes;
    return r;
  });
  attempt("r_bm", [&] { return plain("r_bm", brown_mccoy_classical(m.algebra, opts), "wedderburn-blocks"); });
  attempt("r_Hb", [&] { return h_baer_radical(m, opts); });
  attempt("r_Hl", [&] { return h_locally_nilpotent_radical(m, opts); });
  attempt("r_Hj", [&] { return h_jacobson_radical(m, opts); });
  attempt("r_Hbm", [&] { return h_brown_mccoy_radical(m, opts); });
  attempt("r_gt", [&] {
    auto t = normalized_integral(m.hopf);
    if (!t) throw Unsupported("H has no normalized left integral");
    return gt_radical(m, *t, opts);
  });
  for (auto base : {FisherBase::baer, FisherBase::jacobson, FisherBase::locnil, FisherBase::brownmccoy}) {
    attempt("fisher:" + to_string(base), [&] { return fisher_radical(m, base, opts); });
  }
  attempt("rad(R#H)∩R", [&] {
    if (!m.algebra.unit()) throw PreconditionFailed("R has no unit, so R#H is not defined here");
    return plain("rad(R#H)∩R", smash_radical_restricted(m, opts.nil), "smash-nilradical");
  });

  auto get = [&](const std::string& k) -> const Subspace* {
    auto it = entries.find(k);
    if (it == entries.end() || !it->second.available) return nullptr;
    return &*it->second.space;
  };

  for (const auto& [a, ea] : entries)
    for (const auto& [b, eb] : entries) {
      if (!ea.available || !eb.available) {
        rep.containment[a][b] = "n/a";
      } else {
        rep.containment[a][b] = ea.space->is_subspace_of(*eb.space) ? "yes" : "no";
      }
    }

  // Radicals of an H-module algebra are H-ideals.
  for (const auto& [name, e] : entries) {
    if (!e.available || name == "r_b" || name == "r_bm") continue;
    auto c = is_h_ideal(m, *e.space);
    rep.checks.push_back({"h-stable " + name, c.holds ? "pass" : "fail", c.witness});
  }

  const char* chain[] = {"fisher:baer", "r_Hb", "r_Hl", "r_Hj", "r_Hbm"};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    std::string name = std::string(chain[i]) + " ⊆ " + chain[i + 1];
    const Subspace* a = get(chain[i]);
    const Subspace* b = get(chain[i + 1]);
    if (!a || !b) {
      rep.checks.push_back({name, "unsupported", "one side unavailable"});
    } else {
      rep.checks.push_back({name, a->is_subspace_of(*b) ? "pass" : "fail", dims(*a) + ", " + dims(*b)});
    }
  }

  auto equality = [&](const std::string& name, const std::string& x, const std::string& y) {
    const Subspace* a = get(x);
    const Subspace* b = get(y);
    if (!a || !b) {
      rep.checks.push_back({name, "unsupported", "one side unavailable"});
    } else {
      rep.checks.push_back({name, *a == *b ? "pass" : "fail", dims(*a) + ", " + dims(*b)});
    }
  };
  equality("chain stabilizes: r_Hb = r_Hl", "r_Hb", "r_Hl");
  equality("fisher:baer = r_Hl", "fisher:baer", "r_Hl");
  equality("r_gt = r_Hbm", "r_gt", "r_Hbm");

  // W_H against N_tau.
  if (const Subspace* tau = get("r_Hb")) {
    if (within_cap(m, opts.search.limits)) {
      auto w = exact_m_nilpotent_elements(m, std::nullopt, opts.search.limits.cap);
      auto expected = enumerate_elements(*tau, opts.search.limits.cap);
      std::sort(expected.begin(), expected.end(),
                [](const Vector& x, const Vector& y) { return vector_index(x) < vector_index(y); });
      rep.checks.push_back({"W_H = r_Hb", w == expected ? "pass" : "fail",
                            std::to_string(w.size()) + " m-nilpotent elements"});
    } else {
      MembershipOptions mo;
      mo.seed = opts.search.seed;
      mo.tau = *tau;
      std::string status = "pass";
      std::string detail;
      std::size_t count = 0;
      for (const auto& v : sweep_vectors(m.field(), m.dim(), opts.search)) {
        try {
          wh_membership(m, v, std::nullopt, mo);
          ++count;
        } catch (const Contradiction& ex) {
          status = "fail";
          detail = ex.what();
          break;
        }
      }
      if (status == "pass") detail = "no contradiction on " + std::to_string(count) + " swept vectors";
      rep.checks.push_back({"W_H = r_Hb", status, detail});
    }
  } else {
    rep.checks.push_back({"W_H = r_Hb", "unsupported", "r_Hb unavailable"});
  }

  if (m.hopf_dim() == 1) {
    bool ok = true;
    std::string detail;
    auto same = [&](const char* h, const char* c) {
      const Subspace* a = get(h);
      const Subspace* b = get(c);
      if (a && b && *a != *b) {
        ok = false;
        detail += std::string(h) + " != " + c + "; ";
      }
    };
    same("r_Hb", "r_b");
    same("r_Hl", "r_b");
    same("r_Hj", "r_b");
    same("r_Hbm", "r_bm");
    same("fisher:baer", "r_b");
    same("fisher:brownmccoy", "r_bm");
    rep.checks.push_back({"trivial H collapses to classical radicals", ok ? "pass" : "fail", detail});
  }

  if (const Subspace* a = get("rad(R#H)∩R")) {
    if (const Subspace* b = get("r_Hj")) {
      rep.checks.push_back({"rad(R#H)∩R vs r_Hj", "info", *a == *b ? "equal" : "differ"});
    }
  }

  if (const Subspace* tau = get("r_Hb"); tau && tau->is_zero()) {
    bool one_sided = find_left_unit(m.algebra).has_value() || find_right_unit(m.algebra).has_value();
    if (one_sided) {
      rep.checks.push_back({"H-semiprime with one-sided unit has a unit", find_unit(m.algebra) ? "pass" : "fail", ""});
    }
  }

  if (m.algebra.unit()) {
    auto c = check_conjugation_identity(m);
    rep.checks.push_back({"conjugation identity", c.ok() ? "pass" : "fail",
                          std::to_string(c.failures.size()) + " failures"});
  }
  return rep;
}

}  // namespace hopfrad
