#ifndef THETARING_CERTIFICATE_HPP
#define THETARING_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thetaring/theta.hpp"

namespace thetaring {

/// Explicit ideal-membership witness: target == sum h_i * g_i (mod p^m),
/// where g_i = p^{e-i} F_i(x,y) for i <= e and g_{e+1} = y^{p^e}.
/// Cofactors are integer lifts of residues in [0, p^m).
struct Certificate {
  struct Term {
    unsigned generator = 0;
    IntPoly cofactor;
    bool operator==(const Term&) const = default;
  };

  std::uint64_t p = 2;
  unsigned e = 1;
  unsigned m = 1;
  IntPoly target;
  std::vector<Term> cofactors;

  bool operator==(const Certificate&) const = default;
};

/// The generators g_0..g_{e+1}, built straight from the F_n recursion.
std::vector<IntPoly> certificate_generators(const ThetaContext& theta, unsigned e);

/// Expands sum h_i g_i over Z and checks target minus it vanishes mod p^m.
bool verify_certificate(const Certificate& c);

/// Text form, see docs/certificate_format.md.
std::string format_certificate(const Certificate& c);
/// Throws std::invalid_argument on malformed input.
Certificate parse_certificate(std::string_view text);

}  // namespace thetaring

#endif  // THETARING_CERTIFICATE_HPP
