#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hopfrad/algebra.hpp"

namespace hopfrad {

/// Univariate polynomial, coefficients from degree 0 upwards. The zero
/// polynomial has no coefficients.
struct Poly {
  Field field;
  std::vector<Scalar> c;

  Poly() = default;
  Poly(Field f, std::vector<Scalar> coeffs);
  static Poly constant(const Field& f, const Scalar& s);
  /// x - a
  static Poly linear(const Field& f, const Scalar& a);
  static Poly monomial(const Field& f, std::size_t k);

  bool is_zero() const { return c.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Scalar& lead() const { return c.back(); }
  Poly monic() const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

namespace poly {

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::domain_error when b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
/// g = s a + t b with g the monic gcd.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
/// base^e mod m.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);
Poly derivative(const Poly& a);

/// Evaluates f at an element u of a with the given unit (which need not be
/// the unit of a, e.g. a central idempotent).
Element evaluate(const FiniteDimAlgebra& a, const Poly& f, const Element& u, const Element& unit);

/// Monic minimal polynomial of u over the subalgebra with identity `unit`.
Poly minimal_polynomial(const FiniteDimAlgebra& a, const Element& u, const Element& unit);
/// Minimal polynomial of a square matrix.
Poly minimal_polynomial(const Matrix& m);

/// Distinct rational roots, ascending. Throws Unsupported when the constant
/// or leading coefficient is too large to factor by trial division.
std::vector<Scalar> rational_roots(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial over F_p, sorted by
/// degree then coefficients. Uses distinct-degree then equal-degree
/// (Cantor-Zassenhaus) splitting; rng drives the latter.
std::vector<Poly> factor_squarefree_fp(const Poly& f, std::mt19937_64& rng);

/// Irreducibility over the field: exact over F_p; over Q exact only up to
/// degree 3 (nullopt above that when no rational root exists).
std::optional<bool> is_irreducible(const Poly& f, std::mt19937_64& rng);

}  // namespace poly

}  // namespace hopfrad
