// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails or takes longer than ten seconds.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hopfrad/commands.hpp"
#include "hopfrad/errors.hpp"
#include "hopfrad/fixtures.hpp"
#include "hopfrad/membership.hpp"
#include "hopfrad/oracle.hpp"
#include "hopfrad/radicals.hpp"
#include "hopfrad/smash.hpp"

using namespace hopfrad;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<NamedFixture> finite_fixtures() {
  std::vector<NamedFixture> out;
  for (auto& f : builtin_fixtures())
    if (f.module.field().is_prime_field()) out.push_back(f);
  return out;
}

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(d(rng)));
  return v;
}

std::vector<Element> signed_vectors(const Field& f, std::size_t n) {
  std::vector<Element> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Element v;
    for (std::size_t i = 0, c = code; i < n; ++i, c /= 3) v.push_back(f.from_int(static_cast<std::int64_t>(c % 3) - 1));
    out.push_back(v);
  }
  return out;
}

std::vector<Element> sorted_elements(const Subspace& s) {
  auto e = enumerate_elements(s);
  std::sort(e.begin(), e.end(), [](const Vector& a, const Vector& b) { return vector_index(a) < vector_index(b); });
  return e;
}

Outcome axiom_suite() {
  Outcome o;
  for (const auto& nf : builtin_fixtures()) {
    o.require(validate_algebra(nf.module.algebra).ok(), nf.name + ": algebra axioms");
    o.require(validate_hopf(nf.module.hopf).ok(), nf.name + ": Hopf axioms");
    o.require(validate_action(nf.module, nf.level).ok(), nf.name + ": action axioms");
  }
  for (auto f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
    auto e5 = fixture_e5(f);
    auto anti = validate_hopf(mutate_antipode(e5).hopf);
    bool named = false;
    for (const auto& x : anti.failures) named |= x.axiom == "antipode" && !x.indices.empty() && x.indices[0] == 2;
    o.require(named, f.name() + ": corrupted antipode not reported at S(y)");
    auto meas = validate_action(mutate_measuring(e5), CheckLevel::weak);
    bool witness = false;
    for (const auto& x : meas.failures) witness |= x.axiom == "measuring" && x.indices == std::vector<std::size_t>{2, 0, 0};
    o.require(witness, f.name() + ": broken measuring not reported at (y; 1, 1)");
  }
  return o;
}

Outcome generated_ideals() {
  Outcome o;
  std::mt19937_64 rng(0x11);
  std::size_t pairs = 0;
  for (const auto& nf : finite_fixtures()) {
    const auto& m = nf.module;
    auto ideals = enumerate_h_ideals(m);
    for (int t = 0; t < 60; ++t) {
      std::uniform_int_distribution<std::size_t> k(0, m.dim());
      std::vector<Vector> vs;
      for (std::size_t i = k(rng); i > 0; --i) vs.push_back(random_vector(m.field(), m.dim(), rng));
      Subspace e = Subspace::span(m.field(), vs, m.dim());
      o.require(h_ideal_generated(m, e) == least_h_ideal_containing(ideals, e), nf.name + ": (E) is not least");
    }
    for (const auto& b : ideals) {
      if (b.is_zero()) continue;
      for (const auto& c_in : enumerate_h_ideals(restrict_action(m, b))) {
        std::vector<Vector> lifted;
        for (const auto& row : c_in.basis()) {
          Element v = vec::zeros(m.field(), m.dim());
          for (std::size_t i = 0; i < row.size(); ++i) vec::axpy(v, row[i], b.basis()[i]);
          lifted.push_back(v);
        }
        Subspace c = Subspace::span(m.field(), lifted, m.dim());
        ++pairs;
        o.require(ideal_power(m.algebra, h_ideal_generated(m, c), 3).is_subspace_of(c), nf.name + ": (C)^3 not in C");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " nested pairs";
  return o;
}

Outcome m_sequences() {
  Outcome o;
  std::size_t checked = 0;
  try {
    for (const auto& nf : builtin_fixtures()) {
      const auto& m = nf.module;
      MembershipOptions mo;
      mo.tau = baer_chain(m).tau;
      std::vector<Element> vs;
      if (m.field().is_prime_field()) {
        vs = enumerate_vectors(m.dim(), m.field());
        o.require(exact_m_nilpotent_elements(m) == sorted_elements(*mo.tau), nf.name + ": exact W_H != N_tau");
      } else {
        vs = signed_vectors(m.field(), m.dim());
      }
      for (const auto& v : vs) {
        auto r = wh_membership(m, v, std::nullopt, mo);
        ++checked;
        o.require(r.trace.consistent(m), nf.name + ": inconsistent sequence trace");
      }
    }
    Field q = Field::rationals();
    auto e5 = fixture_e5(q);
    MembershipOptions mo;
    for (const auto& v : signed_vectors(q, 2)) {
      bool zero = vec::is_zero(v);
      o.require((wh_membership(e5, v, std::nullopt, mo).verdict == MVerdict::nilpotent) == zero,
                "E5: nonzero element judged m-nilpotent");
    }
    o.require(nilradical(e5.algebra) == Subspace::span(q, {e5.algebra.basis_vector(1)}, 2), "E5: r_b != span{x}");
    o.require(exact_m_nilpotent_elements(fixture_e5(Field::prime(3))).size() == 1, "E5/F_3: W_H != {0}");
  } catch (const Contradiction& e) {
    o.require(false, std::string("contradiction: ") + e.what());
  }
  if (o.ok) o.detail = std::to_string(checked) + " elements";
  return o;
}

Outcome semiprime_intersection_check() {
  Outcome o;
  Field f = Field::prime(3);
  for (auto [name, m] : {std::pair{"E2", fixture_e2(f)}, std::pair{"E4", fixture_e4(f)}, std::pair{"E5", fixture_e5(f)}}) {
    o.require(baer_chain(m).tau == semiprime_intersection(m, enumerate_h_ideals(m)), std::string(name) + "/F_3 mismatch");
  }
  return o;
}

Outcome spanning_sets() {
  Outcome o;
  std::mt19937_64 rng(0x55);
  for (const auto& nf : finite_fixtures()) {
    const auto& m = nf.module;
    auto wh = exact_m_nilpotent_elements(m);
    o.require(exact_m_nilpotent_elements(m, m.hopf_basis()) == wh, nf.name + ": W_L != W_H for the standard basis");
    // a second, random basis of H
    for (int tries = 0; tries < 50; ++tries) {
      std::vector<Element> l;
      for (std::size_t i = 0; i < m.hopf_dim(); ++i) l.push_back(random_vector(m.field(), m.hopf_dim(), rng));
      if (!Subspace::span(m.field(), l, m.hopf_dim()).is_full()) continue;
      o.require(exact_m_nilpotent_elements(m, l) == wh, nf.name + ": W_L != W_H for a random basis");
      break;
    }
  }
  return o;
}

Outcome smash_identities() {
  Outcome o;
  for (const auto& nf : builtin_fixtures()) {
    const auto& m = nf.module;
    if (!m.algebra.unit()) continue;
    o.require(check_conjugation_identity(m).ok(), nf.name + ": conjugation identity");
    FiniteDimAlgebra s = smash_product(m);
    o.require(s.dim() == m.dim() * m.hopf_dim(), nf.name + ": dim R#H");
    o.require(validate_algebra(s).ok(), nf.name + ": R#H not associative");
  }
  return o;
}

Outcome gt_equals_brown_mccoy() {
  Outcome o;
  Field f = Field::prime(5);
  auto m = fixture_e2(f);
  Element t = {f.from_int(3), f.from_int(3)};  // 3(1 + g)
  Subspace x = Subspace::span(f, {m.algebra.basis_vector(1)}, 2);
  o.require(is_normalized_integral(m.hopf, t), "t is not a normalized integral");
  Subspace gt = gt_radical(m, t).space;
  Subspace bm = h_brown_mccoy_radical(m).space;
  o.require(gt == x, "r_gt != span{x}");
  o.require(bm == x, "r_Hbm != span{x}");
  return o;
}

Outcome containment() {
  Outcome o;
  std::size_t links = 0;
  for (const auto& nf : builtin_fixtures()) {
    auto rep = comparison_report(nf.module);
    for (const auto& c : rep.checks) {
      bool chain = c.name.find(" ⊆ ") != std::string::npos;
      bool collapse = c.name == "trivial H collapses to classical radicals";
      if (!chain && !collapse) continue;
      if (c.status == "unsupported") continue;
      links += chain;
      o.require(c.status == "pass", nf.name + ": " + c.name + " " + c.detail);
    }
    if (nf.module.hopf_dim() == 1) {
      bool seen = false;
      for (const auto& c : rep.checks) seen |= c.name == "trivial H collapses to classical radicals";
      o.require(seen, nf.name + ": collapse check missing");
    }
  }
  if (o.ok) o.detail = std::to_string(links) + " chain links";
  return o;
}

Outcome oracle_parity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& nf : finite_fixtures()) {
    const auto& m = nf.module;
    if (std::pow(static_cast<double>(m.field().characteristic()), static_cast<double>(m.dim())) > 1e4) continue;
    auto rep = run_oracle(m);
    ++n;
    o.require(rep.diffs.empty(), nf.name + ": " + (rep.diffs.empty() ? "" : rep.diffs.front()));
  }
  if (o.ok) o.detail = std::to_string(n) + " fixtures";
  return o;
}

Outcome determinism() {
  Outcome o;
  CommandOptions c;
  c.format = "text";
  auto a = cmd_regress(HOPFRAD_FIXTURE_DIR, c);
  auto b = cmd_regress(HOPFRAD_FIXTURE_DIR, c);
  c.format = "json";
  auto ja = cmd_regress(HOPFRAD_FIXTURE_DIR, c);
  auto jb = cmd_regress(HOPFRAD_FIXTURE_DIR, c);
  o.require(a.exit_code == 0 && ja.exit_code == 0, "regress failed on the corpus");
  o.require(a.out == b.out && ja.out == jb.out, "regress reports differ between runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom suite and mutation detection", axiom_suite},
      {"generated H-ideals are least; (C)^3 in C", generated_ideals},
      {"m-sequence verdicts agree; E5 has W_H = 0 and r_b = span{x}", m_sequences},
      {"N_tau equals the intersection of H-semiprime H-ideals", semiprime_intersection_check},
      {"W_L = W_H for bases L of H", spanning_sets},
      {"smash product identities", smash_identities},
      {"E2/F_5: r_gt = r_Hbm = span{x}", gt_equals_brown_mccoy},
      {"containment chain and trivial-H collapse", containment},
      {"oracle parity on finite-field fixtures", oracle_parity},
      {"regress reports are byte-identical", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 10.0) {
      o.ok = false;
      o.detail += " (over 10 s)";
    }
    failures += !o.ok;
    std::printf("%s %zu %s [%.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
