#include "hopfrad/fixtures.hpp"

#include <algorithm>

#include "hopfrad/errors.hpp"

namespace hopfrad {

FiniteDimAlgebra make_algebra(const Field& f, std::size_t dim, const std::vector<Triple>& mult,
                              const std::vector<std::int64_t>& unit) {
  FiniteDimAlgebra a(f, dim);
  for (const auto& t : mult) a.add_structure_constant(t.i, t.j, t.k, f.from_int(t.value));
  if (!unit.empty()) {
    Element u;
    for (auto v : unit) u.push_back(f.from_int(v));
    a.set_unit(u);
  }
  return a;
}

HopfAlgebraData make_hopf(const Field& f, std::size_t dim, const std::vector<Triple>& mult,
                          const std::vector<std::int64_t>& unit, const std::vector<Triple>& comult,
                          const std::vector<std::int64_t>& counit,
                          const std::vector<std::vector<std::int64_t>>& antipode) {
  HopfAlgebraData h;
  h.algebra = make_algebra(f, dim, mult, unit);
  h.comult.assign(dim, vec::zeros(f, dim * dim));
  for (const auto& t : comult) h.comult[t.i][t.j * dim + t.k] += f.from_int(t.value);
  for (auto v : counit) h.counit.push_back(f.from_int(v));
  std::vector<Vector> cols;
  for (const auto& col : antipode) {
    Vector c;
    for (auto v : col) c.push_back(f.from_int(v));
    cols.push_back(std::move(c));
  }
  h.antipode = Matrix::from_columns(f, cols, dim);
  return h;
}

std::vector<Vector> make_action(const Field& f, std::size_t hopf_dim, std::size_t dim, const std::vector<Triple>& act) {
  std::vector<Vector> out(hopf_dim * dim, vec::zeros(f, dim));
  for (const auto& t : act) out[t.i * dim + t.j][t.k] += f.from_int(t.value);
  return out;
}

HopfAlgebraData group_algebra_c2(const Field& f) {
  return make_hopf(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, {1, 0},
                   {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1}, {{1, 0}, {0, 1}});
}

HopfAlgebraData dual_group_algebra_c2(const Field& f) {
  return make_hopf(f, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1},
                   {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}, {1, 0}, {{1, 0}, {0, 1}});
}

HopfAlgebraData sweedler(const Field& f) {
  if (f.characteristic() == 2) throw PreconditionFailed("Sweedler's algebra needs characteristic other than 2");
  // basis 0 = 1, 1 = g, 2 = y, 3 = gy
  std::vector<Triple> mult{{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1},  {0, 3, 3, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
                           {1, 2, 3, 1}, {1, 3, 2, 1}, {2, 0, 2, 1},  {2, 1, 3, -1}, {3, 0, 3, 1}, {3, 1, 2, -1}};
  std::vector<Triple> comult{{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 0, 1}, {2, 1, 2, 1}, {3, 3, 1, 1}, {3, 0, 3, 1}};
  return make_hopf(f, 4, mult, {1, 0, 0, 0}, comult, {1, 1, 0, 0},
                   {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

namespace {

FiniteDimAlgebra dual_numbers(const Field& f) { return make_algebra(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0}); }

}  // namespace

HModuleAlgebra fixture_e1(const Field& f) {
  HModuleAlgebra m;
  m.algebra = make_algebra(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, {1, 0, 1});
  m.hopf = trivial_hopf(f);
  m.action = make_action(f, 1, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}});
  return m;
}

HModuleAlgebra fixture_e2(const Field& f) {
  HModuleAlgebra m;
  m.algebra = dual_numbers(f);
  m.hopf = group_algebra_c2(f);
  m.action = make_action(f, 2, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, -1}});
  return m;
}

HModuleAlgebra fixture_e3(const Field& f) {
  HModuleAlgebra m;
  std::vector<Triple> mult;
  // e_ij has index 2i + j; e_ij e_jl = e_il
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) mult.push_back({2 * i + j, 2 * j + l, 2 * i + l, 1});
  m.algebra = make_algebra(f, 4, mult, {1, 0, 0, 1});
  m.hopf = group_algebra_c2(f);
  std::vector<Triple> act;
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t r = 0; r < 4; ++r) act.push_back({h, r, r, 1});
  m.action = make_action(f, 2, 4, act);
  return m;
}

HModuleAlgebra fixture_e4(const Field& f) {
  HModuleAlgebra m;
  m.algebra = dual_numbers(f);
  m.hopf = dual_group_algebra_c2(f);
  m.action = make_action(f, 2, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}});
  return m;
}

HModuleAlgebra fixture_e5(const Field& f) {
  HModuleAlgebra m;
  m.algebra = dual_numbers(f);
  m.hopf = sweedler(f);
  m.action = make_action(f, 4, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 1, -1}, {2, 1, 0, 1}, {3, 1, 0, 1}});
  return m;
}

std::vector<NamedFixture> builtin_fixtures() {
  const Field q = Field::rationals();
  std::vector<NamedFixture> out{
      {"e1", CheckLevel::unital, fixture_e1(q)},
      {"e2", CheckLevel::unital, fixture_e2(q)},
      {"e3", CheckLevel::unital, fixture_e3(q)},
      {"e4", CheckLevel::unital, fixture_e4(q)},
      {"e5", CheckLevel::unital, fixture_e5(q)},
  };
  auto twin = [&](const std::string& base, std::uint32_t p, HModuleAlgebra (*make)(const Field&)) {
    out.push_back({base + "-f" + std::to_string(p), CheckLevel::unital, make(Field::prime(p))});
  };
  twin("e1", 2, fixture_e1);
  twin("e1", 5, fixture_e1);
  twin("e2", 2, fixture_e2);
  twin("e2", 3, fixture_e2);
  twin("e2", 5, fixture_e2);
  twin("e3", 2, fixture_e3);
  twin("e4", 3, fixture_e4);
  twin("e4", 5, fixture_e4);
  twin("e5", 3, fixture_e5);
  twin("e5", 5, fixture_e5);
  std::sort(out.begin(), out.end(), [](const NamedFixture& a, const NamedFixture& b) { return a.name < b.name; });
  return out;
}

NamedFixture builtin_fixture(const std::string& name) {
  for (auto& fx : builtin_fixtures()) {
    if (fx.name == name) return fx;
  }
  throw PreconditionFailed("unknown builtin fixture '" + name + "'");
}

HModuleAlgebra mutate_antipode(const HModuleAlgebra& e5) {
  HModuleAlgebra m = e5;
  const Field& f = m.field();
  m.hopf.antipode(3, 2) = f.one();
  return m;
}

HModuleAlgebra mutate_measuring(const HModuleAlgebra& e5) {
  HModuleAlgebra m = e5;
  m.action[2 * m.dim() + 0] = m.algebra.basis_vector(0);
  return m;
}

HModuleAlgebra mutate_y_fixes_x(const HModuleAlgebra& e5) {
  HModuleAlgebra m = e5;
  m.action[2 * m.dim() + 1] = m.algebra.basis_vector(1);
  return m;
}

}  // namespace hopfrad
