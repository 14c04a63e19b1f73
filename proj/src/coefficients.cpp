#include "thetaring/coefficients.hpp"

#include <limits>
#include <stdexcept>

namespace thetaring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned vp(const Integer& n, std::uint64_t p) {
  if (sgn(n) == 0) throw std::domain_error("valuation of zero is undefined");
  if (p < 2) throw std::invalid_argument("valuation base must be at least 2");
  Integer q = abs(n);
  unsigned k = 0;
  const Integer base(static_cast<unsigned long>(p));
  while (mpz_divisible_p(q.get_mpz_t(), base.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), base.get_mpz_t());
    ++k;
  }
  return k;
}

unsigned vp(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero is undefined");
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Integer ipow(std::uint64_t base, unsigned exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return r;
}

std::string LocalRing::name() const { return "Z_(" + std::to_string(p) + ")"; }

// ---------------------------------------------------------------------------

ResidueRing::ResidueRing(std::uint64_t p, unsigned m) : p_(p), m_(m), modulus_(1) {
  if (!is_prime(p)) throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("modulus exponent must be positive");
  for (unsigned i = 0; i < m; ++i) {
    if (modulus_ > (std::numeric_limits<std::uint32_t>::max() / p))
      throw std::invalid_argument("modulus p^m must stay below 2^32");
    modulus_ *= p;
  }
}

std::uint64_t ResidueRing::reduce(const Integer& n) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(modulus_));
  return r.get_ui();
}

std::uint64_t ResidueRing::reduce(std::int64_t n) const {
  auto mod = static_cast<std::int64_t>(modulus_);
  std::int64_t r = n % mod;
  return static_cast<std::uint64_t>(r < 0 ? r + mod : r);
}

std::uint64_t ResidueRing::inverse(std::uint64_t unit) const {
  if (unit % p_ == 0) throw std::domain_error("residue is not a unit");
  std::int64_t a = static_cast<std::int64_t>(unit % modulus_), b = static_cast<std::int64_t>(modulus_);
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return reduce(x0);
}

unsigned ResidueRing::valuation(std::uint64_t a) const {
  if (a == 0) return m_;
  unsigned k = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++k;
  }
  return k;
}

std::uint64_t ResidueRing::power_of_p(unsigned k) const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k && i < m_; ++i) r *= p_;
  return k >= m_ ? 0 : r;
}

std::string ResidueRing::name() const {
  return "Z/" + std::to_string(p_) + "^" + std::to_string(m_);
}

// ---------------------------------------------------------------------------

LocalizedRational::LocalizedRational(LocalRing ring, const Integer& numerator, const Integer& denominator)
    : ring_(ring) {
  if (sgn(denominator) == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
  if (mpz_divisible_ui_p(value_.get_den_mpz_t(), static_cast<unsigned long>(ring.p)))
    throw std::domain_error("denominator divisible by " + std::to_string(ring.p));
}

void LocalizedRational::require_same_ring(const LocalizedRational& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("mismatched coefficient rings");
}

LocalizedRational& LocalizedRational::operator+=(const LocalizedRational& o) {
  require_same_ring(o);
  value_ += o.value_;
  return *this;
}

LocalizedRational& LocalizedRational::operator-=(const LocalizedRational& o) {
  require_same_ring(o);
  value_ -= o.value_;
  return *this;
}

LocalizedRational& LocalizedRational::operator*=(const LocalizedRational& o) {
  require_same_ring(o);
  value_ *= o.value_;
  return *this;
}

LocalizedRational LocalizedRational::operator-() const {
  return LocalizedRational(ring_, mpq_class(-value_), Trusted{});
}

std::string LocalizedRational::to_string() const { return value_.get_str(); }

LocalizedRational divide_exact_by_p(const LocalizedRational& q) {
  if (q.is_zero()) return q;
  const auto p = static_cast<unsigned long>(q.ring().p);
  if (!mpz_divisible_ui_p(q.value_.get_num_mpz_t(), p)) throw std::domain_error("not divisible by p");
  mpq_class r = q.value_;
  mpz_divexact_ui(r.get_num_mpz_t(), r.get_num_mpz_t(), p);
  // Denominator is coprime to p, so numerator/p stays reduced.
  return LocalizedRational(q.ring(), std::move(r), LocalizedRational::Trusted{});
}

Residue reduce_mod(const LocalizedRational& q, const ResidueRing& ring) {
  if (q.ring().p != ring.prime()) throw std::invalid_argument("mismatched coefficient rings");
  std::uint64_t num = ring.reduce(q.numerator());
  std::uint64_t den = ring.reduce(q.denominator());
  return Residue(ring, ring.mul(num, ring.inverse(den)));
}

Residue reduce_mod(const Integer& n, const ResidueRing& ring) { return Residue(ring, n); }

Integer lift(const Residue& r) { return Integer(static_cast<unsigned long>(r.value())); }

// ---------------------------------------------------------------------------

void Residue::require_same_ring(const Residue& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("mismatched coefficient rings");
}

Residue& Residue::operator+=(const Residue& o) {
  require_same_ring(o);
  value_ = ring_.add(value_, o.value_);
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same_ring(o);
  value_ = ring_.sub(value_, o.value_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same_ring(o);
  value_ = ring_.mul(value_, o.value_);
  return *this;
}

// ---------------------------------------------------------------------------

Integer coefficient_traits<Integer>::from_fraction(const IntegerRing&, const Integer& num, const Integer& den) {
  if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::invalid_argument("fraction is not an integer");
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

std::string coefficient_traits<Integer>::magnitude_string(const Integer& c) {
  return Integer(abs(c)).get_str();
}

std::string coefficient_traits<LocalizedRational>::magnitude_string(const LocalizedRational& c) {
  return mpq_class(abs(c.value())).get_str();
}

Residue coefficient_traits<Residue>::from_fraction(const ResidueRing& r, const Integer& num, const Integer& den) {
  return reduce_mod(LocalizedRational(LocalRing{r.prime()}, num, den), r);
}

}  // namespace thetaring
