#include "hopfrad/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hopfrad/errors.hpp"

namespace hopfrad {

namespace {

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly random_poly(const Field& f, long below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
  std::vector<Scalar> c;
  for (long i = 0; i < below_degree; ++i) c.push_back(f.from_int(dist(rng)));
  return Poly(f, std::move(c));
}

// f is monic, squarefree and every irreducible factor has degree d.
void equal_degree_split(const Poly& f, long d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& fld = f.field;
  const std::uint32_t p = fld.characteristic();
  for (;;) {
    Poly a = random_poly(fld, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b;
    if (p == 2) {
      // absolute trace a + a^2 + ... + a^(2^(d-1))
      Poly term = poly::mod(a, f);
      b = term;
      for (long i = 1; i < d; ++i) {
        term = poly::mod(poly::mul(term, term), f);
        b = poly::add(b, term);
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = poly::sub(poly::powmod(a, e, f), Poly::constant(fld, fld.one()));
    }
    Poly g = poly::gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(poly::divmod(f, g).first.monic(), d, rng, out);
      return;
    }
  }
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  static const mpz_class limit("1000000000000");
  if (n > limit) throw Unsupported("rational root search: coefficient too large for trial division");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field(f), c(std::move(coeffs)) { trim(c); }

Poly Poly::constant(const Field& f, const Scalar& s) { return Poly(f, {s}); }

Poly Poly::linear(const Field& f, const Scalar& a) { return Poly(f, {-a, f.one()}); }

Poly Poly::monomial(const Field& f, std::size_t k) {
  std::vector<Scalar> c(k + 1, f.zero());
  c[k] = f.one();
  return Poly(f, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  std::vector<Scalar> out;
  for (const auto& s : c) out.push_back(s * inv);
  return Poly(field, std::move(out));
}

namespace poly {

Poly add(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return Poly(a.field, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return Poly(a.field, std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field, {});
  std::vector<Scalar> c(a.c.size() + b.c.size() - 1, a.field.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return Poly(a.field, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = a.c;
  if (a.degree() < b.degree()) return {Poly(a.field, {}), a};
  std::vector<Scalar> q(a.c.size() - b.c.size() + 1, a.field.zero());
  Scalar inv = b.lead().inverse();
  for (std::size_t k = q.size(); k > 0; --k) {
    std::size_t i = k - 1;
    Scalar coef = r[i + b.c.size() - 1] * inv;
    q[i] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] -= coef * b.c[j];
  }
  return {Poly(a.field, std::move(q)), Poly(a.field, std::move(r))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) { return ext_gcd(a, b).g; }

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field;
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f, {});
  Poly t0(f, {}), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Poly k = Poly::constant(f, r0.lead().inverse());
  return {mul(r0, k), mul(s0, k), mul(t0, k)};
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  const Field& f = base.field;
  Poly result = mod(Poly::constant(f, f.one()), m);
  Poly b = mod(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i > 0; --i) {
    result = mod(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i - 1)) result = mod(mul(result, b), m);
  }
  return result;
}

Poly derivative(const Poly& a) {
  std::vector<Scalar> c;
  for (std::size_t i = 1; i < a.c.size(); ++i) c.push_back(a.field.from_int(static_cast<std::int64_t>(i)) * a.c[i]);
  return Poly(a.field, std::move(c));
}

Element evaluate(const FiniteDimAlgebra& a, const Poly& f, const Element& u, const Element& unit) {
  Element r = a.zero();
  for (std::size_t k = f.c.size(); k > 0; --k) {
    r = a.multiply(r, u);
    vec::axpy(r, f.c[k - 1], unit);
  }
  return r;
}

namespace {

Poly min_poly_from_powers(const Field& f, const std::function<Vector(std::size_t)>& power, std::size_t max_degree,
                          std::size_t len) {
  std::vector<Vector> cols{power(0)};
  for (std::size_t k = 1; k <= max_degree; ++k) {
    Vector next = power(k);
    Matrix m = Matrix::from_columns(f, cols, len);
    if (auto sol = solve(m, next)) {
      std::vector<Scalar> c;
      for (const auto& s : *sol) c.push_back(-s);
      c.push_back(f.one());
      return Poly(f, std::move(c));
    }
    cols.push_back(std::move(next));
  }
  throw Contradiction("minimal polynomial: no dependency found within the dimension bound");
}

}  // namespace

Poly minimal_polynomial(const FiniteDimAlgebra& a, const Element& u, const Element& unit) {
  std::vector<Element> powers{unit};
  auto power = [&](std::size_t k) {
    while (powers.size() <= k) powers.push_back(a.multiply(powers.back(), u));
    return powers[k];
  };
  return min_poly_from_powers(a.field(), power, a.dim() + 1, a.dim());
}

Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Matrix> powers{Matrix::identity(m.field(), n)};
  auto power = [&](std::size_t k) {
    while (powers.size() <= k) powers.push_back(powers.back() * m);
    return powers[k].data();
  };
  return min_poly_from_powers(m.field(), power, n, n * n);
}

std::vector<Scalar> rational_roots(const Poly& f) {
  if (!f.field.is_rational()) throw PreconditionFailed("rational_roots needs a polynomial over Q");
  if (f.degree() < 1) return {};
  mpz_class den = 1;
  for (const auto& s : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational_value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& s : f.c) {
    mpq_class v = s.rational_value() * den;
    ints.push_back(v.get_num());
  }
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.push_back(f.field.zero());
  if (static_cast<long>(low) < f.degree()) {
    auto nums = positive_divisors(ints[low]);
    auto dens = positive_divisors(ints.back());
    for (const auto& r : nums)
      for (const auto& s : dens) {
        for (int sign : {1, -1}) {
          mpq_class cand(sign * r, s);
          cand.canonicalize();
          mpq_class val = 0;
          for (std::size_t i = ints.size(); i > 0; --i) val = val * cand + ints[i - 1];
          if (val == 0) {
            Scalar sc = Scalar::rational(cand);
            if (std::find(roots.begin(), roots.end(), sc) == roots.end()) roots.push_back(sc);
          }
        }
      }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Poly> factor_squarefree_fp(const Poly& f, std::mt19937_64& rng) {
  if (!f.field.is_prime_field()) throw PreconditionFailed("factor_squarefree_fp needs a prime field");
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  const Field& fld = f.field;
  const std::uint32_t p = fld.characteristic();
  Poly rest = f.monic();
  Poly x = Poly::monomial(fld, 1);
  Poly h = mod(x, rest);
  for (long d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, mpz_class(p), rest);
    Poly g = gcd(rest, sub(h, x));
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      rest = divmod(rest, g).first.monic();
      h = mod(h, rest);
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
  });
  return out;
}

std::optional<bool> is_irreducible(const Poly& f, std::mt19937_64& rng) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (f.field.is_prime_field()) {
    Poly d = derivative(f);
    if (d.is_zero() || gcd(f, d).degree() > 0) return false;
    return factor_squarefree_fp(f, rng).size() == 1;
  }
  if (!rational_roots(f).empty()) return false;
  if (f.degree() <= 3) return true;
  return std::nullopt;
}

}  // namespace poly

}  // namespace hopfrad
