// Serial reference vs OpenMP kernels on matrix algebras M_n(F_p).
#include <benchmark/benchmark.h>

#include "hopfrad/algebra.hpp"
#include "hopfrad/hideal.hpp"
#include "hopfrad/kernels.hpp"

using namespace hopfrad;

namespace {

/// Matrix units e_ij with e_ij e_kl = delta_jk e_il.
FiniteDimAlgebra matrix_units(const Field& f, std::size_t n) {
  FiniteDimAlgebra a(f, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.add_structure_constant(i * n + j, j * n + l, i * n + l, f.one());
  return a;
}

/// Upper triangular n x n matrices: small enough to enumerate its subspaces.
FiniteDimAlgebra upper_triangular(const Field& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
  FiniteDimAlgebra a(f, units.size());
  for (std::size_t x = 0; x < units.size(); ++x)
    for (std::size_t y = 0; y < units.size(); ++y)
      if (units[x].second == units[y].first)
        for (std::size_t z = 0; z < units.size(); ++z)
          if (units[z] == std::pair{units[x].first, units[y].second}) a.add_structure_constant(x, y, z, f.one());
  return a;
}

template <bool Par>
void BM_Associativity(benchmark::State& state) {
  auto a = matrix_units(Field::prime(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = Par ? par::associativity_failures(a) : serial::associativity_failures(a);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Par>
void BM_FilterIdeals(benchmark::State& state) {
  Field f = Field::prime(2);
  auto a = upper_triangular(f, 3);
  auto all = enumerate_subspaces(a.dim(), f);
  SubspacePredicate pred = [&](const Subspace& s) { return is_ideal(a, s); };
  for (auto _ : state) {
    auto r = Par ? par::filter_subspaces(all, pred) : serial::filter_subspaces(all, pred);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Par>
void BM_SuccessorSets(benchmark::State& state) {
  Field f = Field::prime(2);
  auto a = upper_triangular(f, 3);
  auto vs = enumerate_vectors(a.dim(), f);
  SuccessorFn succ = [&](std::size_t i) {
    std::vector<std::uint32_t> out;
    for (const auto& b : vs) out.push_back(static_cast<std::uint32_t>(vector_index(a.multiply(vs[i], b))));
    return out;
  };
  for (auto _ : state) {
    auto r = Par ? par::successor_sets(vs.size(), succ) : serial::successor_sets(vs.size(), succ);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Par>
void BM_AnnihilatingPair(benchmark::State& state) {
  Field f = Field::prime(2);
  auto a = matrix_units(f, 3);
  // one-sided ideals never annihilate each other in a simple algebra, so
  // both versions scan every pair
  std::vector<Subspace> images;
  for (std::size_t v = 0; v < a.dim(); ++v) images.push_back(Subspace::span(f, {a.basis_vector(v)}, a.dim()));
  for (auto _ : state) {
    auto r = Par ? par::first_annihilating_pair(a, images) : serial::first_annihilating_pair(a, images);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_Associativity<false>)->Name("associativity/serial")->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_Associativity<true>)->Name("associativity/par")->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_FilterIdeals<false>)->Name("filter_ideals/serial");
BENCHMARK(BM_FilterIdeals<true>)->Name("filter_ideals/par");
BENCHMARK(BM_SuccessorSets<false>)->Name("successor_sets/serial");
BENCHMARK(BM_SuccessorSets<true>)->Name("successor_sets/par");
BENCHMARK(BM_AnnihilatingPair<false>)->Name("annihilating_pair/serial");
BENCHMARK(BM_AnnihilatingPair<true>)->Name("annihilating_pair/par");

BENCHMARK_MAIN();
