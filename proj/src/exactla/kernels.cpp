#include "hopfrad/kernels.hpp"

#include <exception>
#include <limits>

#include "hopfrad/algebra.hpp"

namespace hopfrad {

namespace {

bool associative_at(const FiniteDimAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
  Element ek = a.basis_vector(k);
  Element ei = a.basis_vector(i);
  return a.multiply(a.basis_product(i, j), ek) == a.multiply(ei, a.basis_product(j, k));
}

bool annihilates(const FiniteDimAlgebra& a, const Subspace& x, const Subspace& y) {
  for (const auto& u : x.basis()) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Element uk = a.multiply(u, a.basis_vector(k));
      if (vec::is_zero(uk)) continue;
      for (const auto& v : y.basis()) {
        if (!vec::is_zero(a.multiply(uk, v))) return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> first_partner(const FiniteDimAlgebra& a, const std::vector<Subspace>& images,
                                         std::size_t i) {
  if (images[i].is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].is_zero()) continue;
    if (annihilates(a, images[i], images[j])) return j;
  }
  return std::nullopt;
}

// Exceptions must not escape an OpenMP region; the first one is kept and
// rethrown after the loop.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(hopfrad_exception_slot)
      {
        if (!error_) error_ = std::current_exception();
      }
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

namespace serial {

std::vector<IndexTriple> associativity_failures(const FiniteDimAlgebra& a) {
  std::vector<IndexTriple> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!associative_at(a, i, j, k)) out.push_back({i, j, k});
  return out;
}

std::vector<Subspace> filter_subspaces(const std::vector<Subspace>& candidates, const SubspacePredicate& pred) {
  std::vector<Subspace> out;
  for (const auto& s : candidates) {
    if (pred(s)) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> successor_sets(std::size_t count, const SuccessorFn& succ) {
  std::vector<std::vector<std::uint32_t>> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = succ(i);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_annihilating_pair(const FiniteDimAlgebra& a,
                                                                           const std::vector<Subspace>& images) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (auto j = first_partner(a, images, i)) return std::make_pair(i, *j);
  }
  return std::nullopt;
}

}  // namespace serial

namespace par {

std::vector<IndexTriple> associativity_failures(const FiniteDimAlgebra& a) {
  const long n = static_cast<long>(a.dim());
  std::vector<char> bad(static_cast<std::size_t>(n * n * n), 0);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      slot.run([&] {
        for (long k = 0; k < n; ++k) {
          auto idx = static_cast<std::size_t>((i * n + j) * n + k);
          bad[idx] = associative_at(a, i, j, k) ? 0 : 1;
        }
      });
    }
  }
  slot.rethrow();
  std::vector<IndexTriple> out;
  for (std::size_t idx = 0; idx < bad.size(); ++idx) {
    if (!bad[idx]) continue;
    auto un = static_cast<std::size_t>(n);
    out.push_back({idx / (un * un), (idx / un) % un, idx % un});
  }
  return out;
}

std::vector<Subspace> filter_subspaces(const std::vector<Subspace>& candidates, const SubspacePredicate& pred) {
  const long count = static_cast<long>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    slot.run([&] { keep[i] = pred(candidates[i]) ? 1 : 0; });
  }
  slot.rethrow();
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(candidates[i]);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> successor_sets(std::size_t count, const SuccessorFn& succ) {
  std::vector<std::vector<std::uint32_t>> out(count);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    slot.run([&] { out[i] = succ(static_cast<std::size_t>(i)); });
  }
  slot.rethrow();
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_annihilating_pair(const FiniteDimAlgebra& a,
                                                                           const std::vector<Subspace>& images) {
  const long count = static_cast<long>(images.size());
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> partner(images.size(), none);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    slot.run([&] {
      if (auto j = first_partner(a, images, static_cast<std::size_t>(i))) partner[i] = *j;
    });
  }
  slot.rethrow();
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (partner[i] != none) return std::make_pair(i, partner[i]);
  }
  return std::nullopt;
}

}  // namespace par

}  // namespace hopfrad
