#ifndef THETARING_COEFFICIENTS_HPP
#define THETARING_COEFFICIENTS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace thetaring {

using Integer = mpz_class;

bool is_prime(std::uint64_t n);

/// Largest k with p^k | n. Throws std::domain_error for n == 0.
unsigned vp(const Integer& n, std::uint64_t p);
unsigned vp(std::uint64_t n, std::uint64_t p);

Integer ipow(std::uint64_t base, unsigned exponent);

// ---------------------------------------------------------------------------
// Coefficient rings. Every coefficient type exposes a small descriptor of the
// ring it lives in so polynomials can refuse to mix rings at runtime.
// ---------------------------------------------------------------------------

struct IntegerRing {
  bool operator==(const IntegerRing&) const = default;
  std::string name() const { return "Z"; }
};

/// Z_(p): fractions whose denominator is coprime to p.
struct LocalRing {
  std::uint64_t p = 2;
  bool operator==(const LocalRing&) const = default;
  std::string name() const;
};

/// Z/p^m. The modulus is kept below 2^32 so products of two residues fit in
/// 64 bits.
class ResidueRing {
 public:
  ResidueRing() : ResidueRing(2, 1) {}
  ResidueRing(std::uint64_t p, unsigned m);

  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t reduce(const Integer& n) const;
  std::uint64_t reduce(std::int64_t n) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + modulus_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % modulus_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus_ - a; }
  /// Inverse of a unit (a value not divisible by p).
  std::uint64_t inverse(std::uint64_t unit) const;
  /// p-adic valuation of a residue, with valuation(0) == m.
  unsigned valuation(std::uint64_t a) const;
  std::uint64_t power_of_p(unsigned k) const;

  bool operator==(const ResidueRing& o) const { return p_ == o.p_ && m_ == o.m_; }
  std::string name() const;

 private:
  std::uint64_t p_;
  unsigned m_;
  std::uint64_t modulus_;
};

class LocalizedRational {
 public:
  using ring_type = LocalRing;

  explicit LocalizedRational(LocalRing ring = {}) : ring_(ring), value_(0) {}
  LocalizedRational(LocalRing ring, const Integer& numerator, const Integer& denominator = 1);
  LocalizedRational(LocalRing ring, long numerator, long denominator = 1)
      : LocalizedRational(ring, Integer(numerator), Integer(denominator)) {}

  const LocalRing& ring() const { return ring_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  LocalizedRational& operator+=(const LocalizedRational& o);
  LocalizedRational& operator-=(const LocalizedRational& o);
  LocalizedRational& operator*=(const LocalizedRational& o);
  friend LocalizedRational operator+(LocalizedRational a, const LocalizedRational& b) { return a += b; }
  friend LocalizedRational operator-(LocalizedRational a, const LocalizedRational& b) { return a -= b; }
  friend LocalizedRational operator*(LocalizedRational a, const LocalizedRational& b) { return a *= b; }
  LocalizedRational operator-() const;

  bool operator==(const LocalizedRational& o) const { return ring_ == o.ring_ && value_ == o.value_; }

  std::string to_string() const;

 private:
  struct Trusted {};
  LocalizedRational(LocalRing ring, mpq_class value, Trusted) : ring_(ring), value_(std::move(value)) {}
  void require_same_ring(const LocalizedRational& o) const;

  LocalRing ring_;
  mpq_class value_;

  friend LocalizedRational divide_exact_by_p(const LocalizedRational& q);
};

class Residue {
 public:
  using ring_type = ResidueRing;

  explicit Residue(ResidueRing ring = {}) : ring_(ring), value_(0) {}
  Residue(ResidueRing ring, std::uint64_t value) : ring_(ring), value_(value % ring.modulus()) {}
  Residue(ResidueRing ring, const Integer& value) : ring_(ring), value_(ring.reduce(value)) {}

  const ResidueRing& ring() const { return ring_; }
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  Residue operator-() const { return Residue(ring_, ring_.neg(value_)); }

  bool operator==(const Residue& o) const { return ring_ == o.ring_ && value_ == o.value_; }

  std::string to_string() const { return std::to_string(value_); }

 private:
  void require_same_ring(const Residue& o) const;

  ResidueRing ring_;
  std::uint64_t value_;
};

/// q / p, exact. Throws std::domain_error("not divisible by p") when the
/// numerator is a p-adic unit.
LocalizedRational divide_exact_by_p(const LocalizedRational& q);

/// The ring map Z_(p) -> Z/p^m.
Residue reduce_mod(const LocalizedRational& q, const ResidueRing& ring);
Residue reduce_mod(const Integer& n, const ResidueRing& ring);

/// Canonical representative in [0, p^m) lifted back to Z.
Integer lift(const Residue& r);

// ---------------------------------------------------------------------------
// coefficient_traits: the uniform surface Polynomial<C> relies on.
// ---------------------------------------------------------------------------

template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Integer> {
  using ring_type = IntegerRing;
  static IntegerRing ring_of(const Integer&) { return {}; }
  static Integer zero(const IntegerRing&) { return 0; }
  static Integer from_integer(const IntegerRing&, const Integer& n) { return n; }
  /// Throws std::invalid_argument unless den == 1 (or divides num).
  static Integer from_fraction(const IntegerRing&, const Integer& num, const Integer& den);
  static bool is_zero(const Integer& c) { return sgn(c) == 0; }
  static bool is_negative(const Integer& c) { return sgn(c) < 0; }
  static std::string magnitude_string(const Integer& c);
};

template <>
struct coefficient_traits<LocalizedRational> {
  using ring_type = LocalRing;
  static LocalRing ring_of(const LocalizedRational& c) { return c.ring(); }
  static LocalizedRational zero(const LocalRing& r) { return LocalizedRational(r); }
  static LocalizedRational from_integer(const LocalRing& r, const Integer& n) { return {r, n}; }
  static LocalizedRational from_fraction(const LocalRing& r, const Integer& num, const Integer& den) {
    return {r, num, den};
  }
  static bool is_zero(const LocalizedRational& c) { return c.is_zero(); }
  static bool is_negative(const LocalizedRational& c) { return c.sign() < 0; }
  static std::string magnitude_string(const LocalizedRational& c);
};

template <>
struct coefficient_traits<Residue> {
  using ring_type = ResidueRing;
  static ResidueRing ring_of(const Residue& c) { return c.ring(); }
  static Residue zero(const ResidueRing& r) { return Residue(r); }
  static Residue from_integer(const ResidueRing& r, const Integer& n) { return {r, n}; }
  static Residue from_fraction(const ResidueRing& r, const Integer& num, const Integer& den);
  static bool is_zero(const Residue& c) { return c.is_zero(); }
  static bool is_negative(const Residue&) { return false; }
  static std::string magnitude_string(const Residue& c) { return c.to_string(); }
};

}  // namespace thetaring

#endif  // THETARING_COEFFICIENTS_HPP
