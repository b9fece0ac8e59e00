#include "hopfrad/nilradical.hpp"

#include "hopfrad/errors.hpp"
#include "hopfrad/hideal.hpp"

namespace hopfrad {

namespace {

using IntMatrix = std::vector<mpz_class>;

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t n, const mpz_class& modulus) {
  IntMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  for (auto& v : out) v %= modulus;
  return out;
}

// (tr(X^(p^i)) mod p^(i+1)) / p^i for an integer lift X of x's left
// multiplication matrix.
Scalar ciw_functional(const FiniteDimAlgebra& a, const Element& x, std::size_t i) {
  const Field& f = a.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim();
  Matrix lx = a.left_mult(x);
  mpz_class pi, modulus;
  mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
  modulus = pi * p;
  IntMatrix base(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) base[r * n + c] = lx(r, c).residue_value();
  IntMatrix result(n * n, 0);
  for (std::size_t d = 0; d < n; ++d) result[d * n + d] = 1;
  mpz_class e = pi;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = int_mul(result, base, n, modulus);
    e /= 2;
    if (e > 0) base = int_mul(base, base, n, modulus);
  }
  mpz_class tr = 0;
  for (std::size_t d = 0; d < n; ++d) tr += result[d * n + d];
  tr %= modulus;
  if (tr % pi != 0) throw Contradiction("ciw backend: p-power trace not divisible by p^i");
  mpz_class q = tr / pi;
  return f.from_int(mpz_class(q % p).get_si());
}

}  // namespace

std::string to_string(NilBackend b) {
  switch (b) {
    case NilBackend::automatic:
      return "automatic";
    case NilBackend::trace:
      return "trace";
    case NilBackend::ciw:
      return "ciw";
    case NilBackend::exhaustive:
      return "exhaustive";
  }
  return "automatic";
}

bool trace_backend_applies(const FiniteDimAlgebra& a) {
  return a.field().is_rational() || a.field().characteristic() > a.dim();
}

Subspace nilradical_trace(const FiniteDimAlgebra& a) {
  if (!trace_backend_applies(a)) {
    throw Unsupported("trace backend needs characteristic 0 or p > dim (p = " +
                      std::to_string(a.field().characteristic()) + ", dim = " + std::to_string(a.dim()) + ")");
  }
  const std::size_t n = a.dim();
  Matrix gram(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) gram(j, k) = a.left_mult(a.basis_product(k, j)).trace();
  Subspace out = Subspace::span(a.field(), kernel_basis(gram), n);
  if (!is_ideal(a, out)) throw Contradiction("trace backend produced a non-ideal");
  return out;
}

Subspace nilradical_ciw(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  if (!f.is_prime_field()) throw Unsupported("ciw backend needs a prime field");
  const std::uint32_t p = f.characteristic();
  // The regular representation of the unitization is faithful and has the
  // same radical (index 0 is the adjoined unit).
  FiniteDimAlgebra u = unitization(a);
  const std::size_t n = u.dim();
  Matrix gram(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) gram(j, k) = u.left_mult(u.basis_product(k, j)).trace();
  Subspace current = Subspace::span(f, kernel_basis(gram), n);
  std::size_t levels = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++levels;
  for (std::size_t i = 1; i <= levels && !current.is_zero(); ++i) {
    const auto& basis = current.basis();
    Matrix sys(f, n, basis.size());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < basis.size(); ++k) {
        sys(j, k) = ciw_functional(u, u.multiply(basis[k], u.basis_vector(j)), i);
      }
    std::vector<Vector> next;
    for (const auto& c : kernel_basis(sys)) {
      Vector v = vec::zeros(f, n);
      for (std::size_t k = 0; k < basis.size(); ++k) vec::axpy(v, c[k], basis[k]);
      next.push_back(std::move(v));
    }
    current = Subspace::span(f, next, n);
  }
  std::vector<Vector> rows;
  for (const auto& v : current.basis()) {
    if (!v[0].is_zero()) throw Contradiction("ciw backend: radical meets the adjoined unit");
    rows.emplace_back(v.begin() + 1, v.end());
  }
  Subspace out = Subspace::span(f, rows, a.dim());
  if (!is_ideal(a, out) || !nilpotency_index(a, out).nilpotent) {
    throw Contradiction("ciw backend produced a non-nilpotent or non-ideal subspace");
  }
  return out;
}

Subspace nilradical_exhaustive(const FiniteDimAlgebra& a, const EnumerationLimits& limits) {
  Subspace best = Subspace::zero(a.field(), a.dim());
  std::vector<Subspace> nilpotent;
  for (const auto& i : enumerate_ideals(a, limits)) {
    if (!nilpotency_index(a, i).nilpotent) continue;
    nilpotent.push_back(i);
    if (i.dim() > best.dim()) best = i;
  }
  for (const auto& i : nilpotent) {
    if (!i.is_subspace_of(best)) throw Contradiction("exhaustive backend: nilpotent ideals have no largest element");
  }
  return best;
}

NilradicalResult compute_nilradical(const FiniteDimAlgebra& a, const NilradicalOptions& opts) {
  NilradicalResult out;
  NilBackend chosen = opts.backend;
  if (chosen == NilBackend::automatic) {
    if (trace_backend_applies(a)) {
      chosen = NilBackend::trace;
    } else {
      chosen = NilBackend::ciw;
      out.notes.push_back("unsupported: p <= dim for trace backend; ciw backend used");
    }
  }
  switch (chosen) {
    case NilBackend::trace:
      out.space = nilradical_trace(a);
      break;
    case NilBackend::ciw:
      out.space = nilradical_ciw(a);
      break;
    case NilBackend::exhaustive:
      out.space = nilradical_exhaustive(a, opts.limits);
      break;
    case NilBackend::automatic:
      break;
  }
  out.backend = chosen;
  if (!opts.cross_check) return out;

  auto compare = [&](NilBackend other, const Subspace& s) {
    if (s != out.space) {
      throw Contradiction("nilradical backends disagree: " + to_string(chosen) + " vs " + to_string(other));
    }
    out.notes.push_back("cross-checked against " + to_string(other) + " backend");
  };
  if (chosen != NilBackend::trace && trace_backend_applies(a)) compare(NilBackend::trace, nilradical_trace(a));
  if (chosen != NilBackend::ciw && a.field().is_prime_field()) compare(NilBackend::ciw, nilradical_ciw(a));
  if (chosen != NilBackend::exhaustive && a.field().is_prime_field()) {
    try {
      check_enumerable(a.dim(), a.field(), opts.limits);
      compare(NilBackend::exhaustive, nilradical_exhaustive(a, opts.limits));
    } catch (const CapExceeded&) {
      out.notes.push_back("exhaustive cross-check skipped: enumeration cap");
    }
  }
  return out;
}

Subspace nilradical(const FiniteDimAlgebra& a, const NilradicalOptions& opts) { return compute_nilradical(a, opts).space; }

}  // namespace hopfrad
