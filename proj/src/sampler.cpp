#include "thetaring/sampler.hpp"

#include <array>
#include <vector>

namespace thetaring {

PolynomialSampler::PolynomialSampler(std::uint64_t p, std::uint64_t seed)
    : ring_{p}, engine_(seed ^ (0x9e3779b97f4a7c15ULL * p)) {}

Monomial PolynomialSampler::monomial() {
  const auto degree = static_cast<unsigned>(below(5));
  const auto x = static_cast<unsigned>(below(degree + 1));
  return {x, degree - x};
}

LocalPoly PolynomialSampler::local() {
  static constexpr std::array<long, 4> kSmallPrimes{2, 3, 5, 7};
  std::vector<long> denominators;
  for (long q : kSmallPrimes)
    if (static_cast<std::uint64_t>(q) != ring_.p) denominators.push_back(q);

  LocalPoly f(ring_);
  const auto terms = below(7);
  for (std::uint64_t i = 0; i < terms; ++i) {
    const long num = static_cast<long>(below(19)) - 9;
    const long den = below(2) == 0 ? 1 : denominators[below(denominators.size())];
    f.add_term(monomial(), LocalizedRational(ring_, num, den));
  }
  return f;
}

IntPoly PolynomialSampler::integral() {
  IntPoly f;
  const auto terms = below(7);
  for (std::uint64_t i = 0; i < terms; ++i) {
    const long c = static_cast<long>(below(19)) - 9;
    f.add_term(monomial(), Integer(c));
  }
  return f;
}

}  // namespace thetaring
