#ifndef THETARING_SAMPLER_HPP
#define THETARING_SAMPLER_HPP

#include <cstdint>
#include <random>

#include "thetaring/theta.hpp"

namespace thetaring {

/// Seeded generator of small test polynomials over Z_(p): total degree <= 4,
/// at most 6 terms, numerators in [-9, 9], denominators 1 or a small prime
/// other than p. Uses plain modular reduction of the engine output so the
/// stream is identical across standard libraries.
class PolynomialSampler {
 public:
  PolynomialSampler(std::uint64_t p, std::uint64_t seed);

  LocalPoly local();
  IntPoly integral();
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  Monomial monomial();

  LocalRing ring_;
  std::mt19937_64 engine_;
};

}  // namespace thetaring

#endif  // THETARING_SAMPLER_HPP
