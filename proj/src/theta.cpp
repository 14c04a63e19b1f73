#include "thetaring/theta.hpp"

#include <algorithm>

namespace thetaring {

ThetaContext::ThetaContext(std::uint64_t p) : p_(p), local_{p} {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

LocalPoly ThetaContext::psi(const LocalPoly& f) const {
  const auto p = static_cast<unsigned>(p_);
  LocalPoly sx = LocalPoly::monomial(local_, {p, 0}) - LocalPoly::monomial(local_, {0, 1}, static_cast<long>(p_));
  LocalPoly sy = LocalPoly::monomial(local_, {0, p});
  return substitute(f, sx, sy);
}

LocalPoly ThetaContext::psi_iterate(const LocalPoly& f, unsigned k) const {
  LocalPoly r = f;
  for (unsigned i = 0; i < k; ++i) r = psi(r);
  return r;
}

LocalPoly ThetaContext::theta(const LocalPoly& f) const {
  LocalPoly diff = power(f, static_cast<unsigned>(p_)) - psi(f);
  LocalPoly r(local_);
  for (const auto& [m, c] : diff.terms()) {
    try {
      r.add_term(m, divide_exact_by_p(c));
    } catch (const std::domain_error&) {
      throw FrobeniusCongruenceError("Frobenius congruence violated");
    }
  }
  return r;
}

bool ThetaContext::check_frobenius_congruence(const LocalPoly& f) const {
  LocalPoly diff = power(f, static_cast<unsigned>(p_)) - psi(f);
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [&](const auto& t) { return vp(t.second.numerator(), p_) >= 1; });
}

Integer binomial_over_p(std::uint64_t p, unsigned j) {
  if (j == 0 || j >= p) throw std::invalid_argument("binomial_over_p needs 0 < j < p");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(p - 1), j - 1);
  if (!mpz_divisible_ui_p(c.get_mpz_t(), j)) throw std::logic_error("C(p-1, j-1) / j is not integral");
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j);
  return c;
}

LocalPoly theta_sum_correction(const LocalPoly& f, const LocalPoly& g, std::uint64_t p) {
  LocalPoly r(f.ring());
  for (unsigned j = 1; j < p; ++j) {
    LocalizedRational c(f.ring(), binomial_over_p(p, j));
    r += (power(f, j) * power(g, static_cast<unsigned>(p) - j)).scaled(c);
  }
  return r;
}

namespace {

IdentityCheck compare(std::string name, const LocalPoly& lhs, const LocalPoly& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, {}, {}};
  if (!c.holds) {
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
  }
  return c;
}

}  // namespace

AxiomReport ThetaContext::check_axioms(const LocalPoly& f, const LocalPoly& g) const {
  const auto p = static_cast<unsigned>(p_);
  AxiomReport report;
  LocalPoly zero(local_);
  LocalPoly tf = theta(f), tg = theta(g);
  LocalPoly pf = psi(f), pg = psi(g);

  report.checks[0] = compare("theta(1) = 0", theta(local_constant(1)), zero);
  report.checks[1] = compare("theta(f+g) = theta(f) + theta(g) + sum_j C(p,j)/p f^j g^(p-j)", theta(f + g),
                             tf + tg + theta_sum_correction(f, g, p_));
  report.checks[2] = compare("theta(fg) = theta(f) psi(g) + f^p theta(g)", theta(f * g), tf * pg + power(f, p) * tg);
  report.checks[3] = compare("theta(psi(f)) = psi(theta(f))", theta(pf), psi(tf));
  report.checks[4] = compare("psi(f+g) = psi(f) + psi(g)", psi(f + g), pf + pg);
  report.checks[5] = compare("psi(fg) = psi(f) psi(g)", psi(f * g), pf * pg);
  return report;
}

bool ThetaContext::check_prop1(const LocalPoly& b) const {
  const auto p = static_cast<unsigned>(p_);
  LocalizedRational pc(local_, Integer(static_cast<unsigned long>(p_)));
  LocalizedRational pp(local_, ipow(p_, p - 1));
  return theta(b.scaled(pc)) == power(b, p).scaled(pp) - psi(b);
}

const IntPoly& ThetaContext::F(unsigned n) const {
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  }
  const auto p = static_cast<unsigned>(p_);
  IntPoly value;
  if (n == 0) {
    value = IntPoly::x({});
  } else {
    const IntPoly& prev = F(n - 1);
    IntPoly diagonal = substitute(prev, IntPoly::y({}), IntPoly(IntegerRing{}));
    value = power(prev, p) - diagonal.scaled(Integer(static_cast<unsigned long>(p)));
  }

  Integer degree = ipow(p_, n);
  if (value.is_zero() || value.leading().first != Monomial{static_cast<unsigned>(degree.get_ui()), 0} ||
      value.leading().second != 1 || value.degree_x() != degree)
    throw std::logic_error("F_" + std::to_string(n) + " is not monic of degree p^n in s");

  std::lock_guard lock(memo_mutex_);
  auto [it, _] = memo_.try_emplace(n, std::move(value));
  return it->second;
}

bool ThetaContext::check_F_substitution(unsigned n) const {
  if (n == 0) throw std::invalid_argument("check_F_substitution needs n >= 1");
  const auto p = static_cast<unsigned>(p_);
  IntPoly sx = IntPoly::monomial({}, {p, 0}) - IntPoly::monomial({}, {0, 1}, static_cast<long>(p_));
  IntPoly sy = IntPoly::monomial({}, {0, p});
  return F(n) == substitute(F(n - 1), sx, sy);
}

bool ThetaContext::check_F_power_congruence(unsigned n) const {
  if (n == 0) throw std::invalid_argument("check_F_power_congruence needs n >= 1");
  IntPoly diff = F(n) - expand_exponents(F(n - 1), static_cast<unsigned>(p_));
  Integer pn = ipow(p_, n);
  return std::all_of(diff.terms().begin(), diff.terms().end(), [&](const auto& t) {
    return mpz_divisible_p(t.second.get_mpz_t(), pn.get_mpz_t()) != 0;
  });
}

bool ThetaContext::F_diagonal_identity(unsigned e) const {
  const auto pe = static_cast<unsigned>(ipow(p_, e).get_ui());
  const IntPoly& fe = F(e);
  IntPoly at_t0 = substitute(fe, IntPoly::y({}), IntPoly(IntegerRing{}));
  if (!(at_t0 == IntPoly::monomial({}, {0, pe}))) return false;
  return theta(local(fe)) == LocalPoly::monomial(local_, {0, pe});
}

Integer nilpotence_bound(const Integer& n) {
  if (sgn(n) == 0) throw std::domain_error("no torsion bound");
  Integer rest = abs(n);
  Integer best = 1;
  for (Integer d = 2; d * d <= rest; ++d) {
    if (!mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) continue;
    Integer pe = 1;
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      rest /= d;
      pe *= d;
    }
    best = std::max<Integer>(best, pe + pe / d);
  }
  if (rest > 1) best = std::max<Integer>(best, rest + 1);
  return best;
}

}  // namespace thetaring
