#ifndef THETARING_THETA_HPP
#define THETARING_THETA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "thetaring/polynomial.hpp"

namespace thetaring {

using IntPoly = Polynomial<Integer>;
using LocalPoly = Polynomial<LocalizedRational>;
using ResiduePoly = Polynomial<Residue>;

/// Raised when (f^p - psi(f)) has a coefficient that p does not divide.
class FrobeniusCongruenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string lhs;  // rendered only when the identity fails
  std::string rhs;
};

struct AxiomReport {
  std::array<IdentityCheck, 6> checks;

  bool all_hold() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

/// The theta^p-ring structure on Z_(p)[x,y] given by the Frobenius lift
/// x -> x^p - p*y, y -> y^p, together with the integer family
/// F_0 = s, F_n = F_{n-1}^p - p*F_{n-1}(t, 0).
///
/// The F_n memo is append-only and guarded, so one context may be shared
/// between threads.
class ThetaContext {
 public:
  explicit ThetaContext(std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  const LocalRing& local_ring() const { return local_; }

  LocalPoly psi(const LocalPoly& f) const;
  LocalPoly psi_iterate(const LocalPoly& f, unsigned k) const;
  /// (f^p - psi(f)) / p. Throws FrobeniusCongruenceError if the division is
  /// not exact.
  LocalPoly theta(const LocalPoly& f) const;

  bool check_frobenius_congruence(const LocalPoly& f) const;
  AxiomReport check_axioms(const LocalPoly& f, const LocalPoly& g) const;
  bool check_prop1(const LocalPoly& b) const;

  /// F_n over Z in (s, t). Monic of degree p^n in s.
  const IntPoly& F(unsigned n) const;

  bool check_F_substitution(unsigned n) const;
  bool check_F_power_congruence(unsigned n) const;
  bool F_diagonal_identity(unsigned e) const;

  LocalPoly local(const IntPoly& f) const { return to_local(f, local_); }
  LocalPoly local_constant(long c) const { return LocalPoly::constant(local_, c); }

 private:
  std::uint64_t p_;
  LocalRing local_;
  mutable std::mutex memo_mutex_;
  mutable std::map<unsigned, IntPoly> memo_;
};

/// The Frobenius correction sum_{j=1}^{p-1} (C(p,j)/p) f^j g^{p-j}.
LocalPoly theta_sum_correction(const LocalPoly& f, const LocalPoly& g, std::uint64_t p);

/// C(p, j) / p for 0 < j < p, computed as C(p-1, j-1) / j.
Integer binomial_over_p(std::uint64_t p, unsigned j);

/// E = max over prime powers p^e || n of p^e + p^{e-1}; 1 for n = +-1.
/// Throws std::domain_error("no torsion bound") for n = 0.
Integer nilpotence_bound(const Integer& n);

}  // namespace thetaring

#endif  // THETARING_THETA_HPP
