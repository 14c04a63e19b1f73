#include <doctest.h>

#include <map>

#include "thetaring/sampler.hpp"
#include "thetaring/theta.hpp"

using namespace thetaring;

namespace {

LocalPoly L(const char* text, std::uint64_t p) { return parse_polynomial<LocalizedRational>(text, LocalRing{p}); }
IntPoly S(const char* text) { return parse_polynomial<Integer>(text, {}, kST); }

Integer evaluate(const IntPoly& f, const Integer& s, const Integer& t) {
  Integer r = 0;
  for (const auto& [m, c] : f.terms()) {
    Integer term = c;
    for (unsigned i = 0; i < m.x; ++i) term *= s;
    for (unsigned i = 0; i < m.y; ++i) term *= t;
    r += term;
  }
  return r;
}

// Oracle: the F_n recursion evaluated on numbers, never on polynomials.
Integer F_value(unsigned n, std::uint64_t p, const Integer& s, const Integer& t) {
  if (n == 0) return s;
  Integer prev = F_value(n - 1, p, s, t);
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(p));
  return r - Integer(static_cast<unsigned long>(p)) * F_value(n - 1, p, t, 0);
}

// Oracle: trial factorization of n, max over prime powers of p^e + p^(e-1).
long bound_by_enumeration(long n) {
  long best = 1;
  for (long p = 2; p <= n; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime || n % p != 0) continue;
    long pe = 1;
    while (n % (pe * p) == 0) pe *= p;
    best = std::max(best, pe + pe / p);
  }
  return best;
}

}  // namespace

TEST_CASE("psi and theta on generators") {
  for (std::uint64_t p : {2, 3, 5}) {
    ThetaContext th(p);
    LocalPoly x = L("x", p), y = L("y", p);
    CHECK(th.psi(x) == LocalPoly::monomial(th.local_ring(), {static_cast<unsigned>(p), 0}) -
                           LocalPoly::monomial(th.local_ring(), {0, 1}, static_cast<long>(p)));
    CHECK(th.psi(y) == LocalPoly::monomial(th.local_ring(), {0, static_cast<unsigned>(p)}));
    CHECK(th.psi(L("7", p)) == L("7", p));
    CHECK(th.theta(x) == y);
    CHECK(th.theta(y).is_zero());
    // theta(p) = p^(p-1) - 1
    LocalPoly pc = th.local_constant(static_cast<long>(p));
    CHECK(th.theta(pc) == LocalPoly::constant(th.local_ring(), LocalizedRational(th.local_ring(), ipow(p, p - 1) - 1)));
    CHECK(th.psi_iterate(x, 0) == x);
    CHECK(th.psi_iterate(x, 1) == th.psi(x));
  }
}

TEST_CASE("theta reports a broken congruence") {
  // every Z_(p) polynomial satisfies the congruence; hit the error path directly
  CHECK_THROWS_AS(divide_exact_by_p(LocalizedRational(LocalRing{3}, 1)), std::domain_error);
}

TEST_CASE("frobenius congruence") {
  for (std::uint64_t p : {2, 3, 5}) {
    ThetaContext th(p);
    CHECK(th.check_frobenius_congruence(L("x", p)));
    CHECK(th.check_frobenius_congruence(L("y", p)));
    PolynomialSampler sampler(p, 3);
    for (int t = 0; t < 50; ++t) CHECK(th.check_frobenius_congruence(th.local(sampler.integral())));
  }
}

TEST_CASE("binomial_over_p") {
  CHECK(binomial_over_p(5, 1) == 1);
  CHECK(binomial_over_p(5, 2) == 2);
  CHECK(binomial_over_p(7, 3) == 5);
  CHECK_THROWS_AS(binomial_over_p(5, 0), std::invalid_argument);
}

TEST_CASE("axioms") {
  ThetaContext th2(2);
  CHECK(th2.check_axioms(L("x", 2), L("y", 2)).all_hold());
  CHECK(th2.check_axioms(L("0", 2), L("0", 2)).all_hold());
  for (std::uint64_t p : {2, 3, 5}) {
    ThetaContext th(p);
    PolynomialSampler sampler(p, 99);
    for (int t = 0; t < 15; ++t) {
      AxiomReport r = th.check_axioms(sampler.local(), sampler.local());
      for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, c.name, " ", c.lhs, " vs ", c.rhs);
    }
  }
}

TEST_CASE("prop1") {
  ThetaContext th(2);
  CHECK(th.check_prop1(L("0", 2)));
  // theta(2x) = (4x^2 - psi(2x)) / 2 = x^2 + 2y
  CHECK(th.theta(L("2*x", 2)) == L("x^2 + 2*y", 2));
  CHECK(th.check_prop1(L("x", 2)));
  for (std::uint64_t p : {3, 5}) {
    ThetaContext t(p);
    PolynomialSampler sampler(p, 4);
    for (int i = 0; i < 20; ++i) CHECK(t.check_prop1(sampler.local()));
  }
}

TEST_CASE("F_n") {
  ThetaContext th2(2), th3(3);
  CHECK(th2.F(0) == S("s"));
  CHECK(th2.F(1) == S("s^2 - 2*t"));
  CHECK(th3.F(1) == S("s^3 - 3*t"));
  CHECK(th2.F(2) == S("s^4 - 4*s^2*t + 2*t^2"));
  CHECK(to_string(th2.F(2), kST) == "s^4 - 4*s^2*t + 2*t^2");

  for (std::uint64_t p : {2, 3, 5}) {
    ThetaContext th(p);
    for (unsigned n = 0; n <= 3; ++n) {
      const IntPoly& f = th.F(n);
      const auto deg = static_cast<unsigned>(ipow(p, n).get_ui());
      CHECK(f.leading().first == Monomial{deg, 0});
      CHECK(f.leading().second == 1);
      for (const auto& [m, c] : f.terms())
        if (!(m == Monomial{deg, 0})) CHECK(m.x < deg);
      for (long s : {-3, 0, 2, 5})
        for (long t : {-1, 1, 4}) CHECK(evaluate(f, s, t) == F_value(n, p, s, t));
    }
  }
}

TEST_CASE("F_n lemmas") {
  ThetaContext th2(2), th3(3);
  CHECK(th2.check_F_substitution(1));
  CHECK(th2.check_F_substitution(2));
  CHECK(th3.check_F_substitution(4));
  CHECK(th2.check_F_power_congruence(1));
  CHECK(th2.check_F_power_congruence(2));
  CHECK(th2.F(2) - expand_exponents(th2.F(1), 2) == S("-4*s^2*t + 4*t^2"));
  CHECK(th3.check_F_power_congruence(3));
  CHECK_THROWS_AS(th2.check_F_substitution(0), std::invalid_argument);

  CHECK(th2.F_diagonal_identity(0));
  CHECK(th2.F_diagonal_identity(1));
  CHECK(th2.theta(th2.local(th2.F(1))) == L("y^2", 2));
  CHECK(th3.F_diagonal_identity(2));
}

TEST_CASE("psi maps F_n(x,y) to F_{n+1}(x,y)") {
  for (std::uint64_t p : {2, 3}) {
    ThetaContext th(p);
    for (unsigned n = 0; n < 3; ++n) CHECK(th.psi_iterate(th.local(th.F(n)), 1) == th.local(th.F(n + 1)));
  }
}

TEST_CASE("nilpotence_bound") {
  CHECK(nilpotence_bound(2) == 3);
  CHECK(nilpotence_bound(12) == 6);
  CHECK(bound_by_enumeration(12) == 6);
  CHECK(nilpotence_bound(8) == 12);
  CHECK(nilpotence_bound(27) == 36);
  CHECK(nilpotence_bound(-12) == 6);
  CHECK(nilpotence_bound(1) == 1);
  CHECK(nilpotence_bound(-1) == 1);
  CHECK_THROWS_WITH_AS(nilpotence_bound(0), "no torsion bound", std::domain_error);
  for (long n = 2; n < 500; ++n) CHECK(nilpotence_bound(n) == bound_by_enumeration(n));
}
