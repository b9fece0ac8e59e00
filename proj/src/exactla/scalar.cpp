#include "hopfrad/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "hopfrad/errors.hpp"

namespace hopfrad {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionFailed("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

Scalar Field::zero() const { return p_ == 0 ? Scalar() : Scalar::residue(0, p_); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  return p_ == 0 ? Scalar::rational(mpq_class(static_cast<long>(v))) : Scalar::residue(v, p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar::rational(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) {
    throw PreconditionFailed("denominator of " + q.get_str() + " vanishes in " + name());
  }
  Scalar n = Scalar::residue(num.get_si(), p_);
  Scalar d = Scalar::residue(den.get_si(), p_);
  return n / d;
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.front() == '+') s.erase(s.begin());
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  try {
    return from_rational(q);
  } catch (const PreconditionFailed& e) {
    throw ParseError(e.what());
  }
}

std::vector<Scalar> Field::elements() const {
  if (p_ == 0) throw PreconditionFailed("the rationals cannot be enumerated");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t v = 0; v < p_; ++v) out.push_back(Scalar::residue(v, p_));
  return out;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += p;
  s.r_ = static_cast<std::uint32_t>(m);
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_) throw std::logic_error("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) return rational(q_ + o.q_);
  Scalar s;
  s.p_ = p_;
  s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + o.r_) % p_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) return rational(q_ - o.q_);
  Scalar s;
  s.p_ = p_;
  s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) + p_ - o.r_) % p_);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (p_ == 0) {
    Scalar s;
    s.q_ = q_ * o.q_;
    return s;
  }
  Scalar s;
  s.p_ = p_;
  s.r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * o.r_) % p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ == 0) {
    Scalar s;
    s.q_ = -q_;
    return s;
  }
  return residue(-static_cast<std::int64_t>(r_), p_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) {
    Scalar s;
    s.q_ = 1 / q_;
    s.q_.canonicalize();
    return s;
  }
  // Extended Euclid on (r, p).
  std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return residue(x0, p_);
}

std::string Scalar::to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.p_ != 0) return a.r_ <=> b.r_;
  int c = cmp(a.q_, b.q_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace hopfrad
