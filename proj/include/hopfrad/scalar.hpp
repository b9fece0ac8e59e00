#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopfrad {

class Scalar;

/// Coefficient field: the rationals or a prime field F_p (p < 2^31).
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws PreconditionFailed unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  Kind kind() const { return p_ == 0 ? Kind::rationals : Kind::prime; }
  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Maps a rational into the field; throws if the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& q) const;
  /// Accepts "a", "-a", "a/b". Throws ParseError.
  Scalar parse(std::string_view text) const;
  /// All p elements of a prime field in residue order.
  std::vector<Scalar> elements() const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms, residues in [0, p).
/// Mixing elements of different fields throws std::logic_error.
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(mpq_class q);
  static Scalar residue(std::int64_t v, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  const mpq_class& rational_value() const { return q_; }
  std::uint32_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used only for canonical sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint32_t r_ = 0;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace hopfrad
