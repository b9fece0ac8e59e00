#include "hopfrad/subspace.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hopfrad/errors.hpp"

namespace hopfrad {

namespace {

Subspace from_rref(const Field& f, std::size_t n, const RrefResult& red) {
  std::vector<Vector> rows;
  rows.reserve(red.reduced.rows());
  for (std::size_t r = 0; r < red.reduced.rows(); ++r) rows.push_back(red.reduced.row(r));
  return Subspace::from_canonical(f, n, std::move(rows), red.pivots);
}

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  if (!(a.field() == b.field())) throw DimensionMismatch("subspaces over different fields");
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

Subspace Subspace::zero(const Field& f, std::size_t n) {
  Subspace s;
  s.field_ = f;
  s.n_ = n;
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t n) {
  Subspace s = zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    s.basis_.push_back(vec::unit(f, n, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const Field& f, const std::vector<Vector>& vectors, std::size_t n) {
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                              std::to_string(n));
    }
  }
  if (vectors.empty()) return zero(f, n);
  return from_rref(f, n, rref(Matrix::from_rows(f, vectors, n)));
}

Subspace Subspace::from_canonical(const Field& f, std::size_t n, std::vector<Vector> rows,
                                  std::vector<std::size_t> pivots) {
  Subspace s = zero(f, n);
  s.basis_ = std::move(rows);
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("reduce: vector length mismatch");
  Vector out = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar& c = out[pivots_[r]];
    if (!c.is_zero()) vec::axpy(out, -c, basis_[r]);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return vec::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  Vector out;
  out.reserve(basis_.size());
  for (auto p : pivots_) out.push_back(v.at(p));
  return out;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  check_compatible(*this, other);
  if (dim() > other.dim()) return false;
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) { return other.contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, basis_, n_); }

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.basis_ <=> b.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), rows, a.ambient_dim());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(f, n);
  // Rows (u | u) for u in a, (w | 0) for w in b; after elimination the rows
  // whose left half vanishes carry a basis of a ∩ b in their right half.
  Matrix z(f, a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = a.basis()[r][c];
      z(r, n + c) = a.basis()[r][c];
    }
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(a.dim() + r, c) = b.basis()[r][c];
  }
  RrefResult red = rref(z);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] < n) continue;
    Vector full_row = red.reduced.row(r);
    Vector v(full_row.begin() + static_cast<std::ptrdiff_t>(n), full_row.end());
    rows.push_back(std::move(v));
  }
  return Subspace::span(f, rows, n);
}

std::uint64_t count_subspaces(std::size_t n, std::uint64_t p) {
  // Gaussian binomial [n, k]_p via the recurrence [n,k] = [n-1,k-1] + p^k [n-1,k].
  std::vector<std::uint64_t> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      std::uint64_t left = k >= 1 ? row[k - 1] : 0;
      std::uint64_t right = k < m ? sat_mul(pk, row[k]) : 0;
      next[k] = sat_add(left, right);
      pk = sat_mul(pk, p);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto x : row) total = sat_add(total, x);
  return total;
}

void check_enumerable(std::size_t n, const Field& f, const EnumerationLimits& limits) {
  if (f.is_rational()) throw PreconditionFailed("enumeration requires a prime field");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size = sat_mul(size, f.characteristic());
  if (size > limits.cap) {
    throw CapExceeded("p^n = " + std::to_string(f.characteristic()) + "^" + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.cap));
  }
  std::uint64_t count = count_subspaces(n, f.characteristic());
  if (count > limits.subspace_cap) {
    throw CapExceeded(std::to_string(count) + " subspaces of " + f.name() + "^" + std::to_string(n) +
                      " exceed subspace cap " + std::to_string(limits.subspace_cap));
  }
}

void for_each_subspace(std::size_t n, const Field& f, const EnumerationLimits& limits,
                       const std::function<void(const Subspace&)>& visit) {
  check_enumerable(n, f, limits);
  const std::uint32_t p = f.characteristic();

  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot sets as increasing k-combinations of {0..n-1}.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      // Free slots: (row, col) with col > pivot of row and col not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = piv[r] + 1; c < n; ++c) {
          if (!is_pivot[c]) slots.emplace_back(r, c);
        }
      }
      std::vector<std::uint32_t> digits(slots.size(), 0);
      while (true) {
        std::vector<Vector> rows(k, vec::zeros(f, n));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = f.one();
        for (std::size_t s = 0; s < slots.size(); ++s) {
          rows[slots[s].first][slots[s].second] = Scalar::residue(digits[s], p);
        }
        visit(Subspace::from_canonical(f, n, std::move(rows), piv));
        if (slots.empty()) break;
        // Mixed-radix increment, last slot fastest.
        bool wrapped = true;
        for (std::size_t s = slots.size(); s > 0; --s) {
          if (++digits[s - 1] < p) {
            wrapped = false;
            break;
          }
          digits[s - 1] = 0;
        }
        if (wrapped) break;
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, const Field& f, const EnumerationLimits& limits) {
  std::vector<Subspace> out;
  for_each_subspace(n, f, limits, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

std::vector<Vector> enumerate_vectors(std::size_t n, const Field& f, std::uint64_t cap) {
  if (f.is_rational()) throw PreconditionFailed("enumeration requires a prime field");
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size = sat_mul(size, f.characteristic());
  if (size > cap) throw CapExceeded("p^n = " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  std::vector<Vector> out;
  out.reserve(size);
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(n, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::residue(digits[i], p);
    out.push_back(std::move(v));
    for (std::size_t i = n; i > 0; --i) {
      if (++digits[i - 1] < p) break;
      digits[i - 1] = 0;
    }
  }
  return out;
}

std::vector<Vector> enumerate_projective_points(std::size_t n, const Field& f, std::uint64_t cap) {
  std::vector<Vector> out;
  for (auto& v : enumerate_vectors(n, f, cap)) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead != v.end() && lead->is_one()) out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t vector_index(const Vector& v) {
  std::uint64_t idx = 0;
  for (const auto& s : v) {
    if (s.modulus() == 0) throw PreconditionFailed("vector_index needs prime-field entries");
    idx = idx * s.modulus() + s.residue_value();
  }
  return idx;
}

std::vector<Vector> enumerate_elements(const Subspace& s, std::uint64_t cap) {
  std::vector<Vector> coeffs = enumerate_vectors(s.dim(), s.field(), cap);
  std::vector<Vector> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Vector v = vec::zeros(s.field(), s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); ++r) vec::axpy(v, c[r], s.basis()[r]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopfrad
