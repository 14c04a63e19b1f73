#include <sstream>
#include <stdexcept>

#include "thetaring/quotient.hpp"

namespace thetaring {

const MembershipModule& ExampleRing::module(unsigned e, unsigned m) const {
  std::lock_guard lock(modules_mutex_);
  auto& slot = modules_[{e, m}];
  if (!slot) slot = std::make_unique<MembershipModule>(MembershipModule::build(theta_, e, m));
  return *slot;
}

unsigned ExampleRing::nilpotence_exponent(unsigned e) const {
  if (e == 0) throw std::invalid_argument("e must be positive");
  Integer n = ipow(prime(), e) + ipow(prime(), e - 1);
  return static_cast<unsigned>(n.get_ui());
}

VerificationResult ExampleRing::membership_verdict(const MembershipResult& r) const {
  VerificationResult v;
  if (!r.member) {
    v.holds = false;
    v.witness = r.witness;
    v.detail = "residue " + to_string(r.witness.to_polynomial());
    return v;
  }
  v.certificate = r.certificate;
  v.holds = r.certificate && verify_certificate(*r.certificate);
  if (!v.holds) v.detail = "certificate failed verification";
  return v;
}

VerificationResult ExampleRing::verify_nilpotence(unsigned e, unsigned m) const {
  const MembershipModule& mod = module(e, m);
  const unsigned n = nilpotence_exponent(e);
  ResiduePoly target = ResiduePoly::monomial(mod.ring(), {n, 0});
  return membership_verdict(mod.is_member_reduced(mod.rewrite().power_of_x(n), target));
}

VerificationResult ExampleRing::verify_sharpness(unsigned e) const {
  const MembershipModule& mod = module(e, e + 1);
  const unsigned n = nilpotence_exponent(e) - 1;
  ResiduePoly target = ResiduePoly::monomial(mod.ring(), {n, 0});
  MembershipResult r = mod.is_member_reduced(mod.rewrite().power_of_x(n), target);
  VerificationResult v;
  v.holds = !r.member;
  v.witness = r.witness;
  v.certificate = r.certificate;
  v.detail = r.member ? "x^" + std::to_string(n) + " lies in the ideal"
                      : "residue " + to_string(r.witness.to_polynomial());
  return v;
}

VerificationResult ExampleRing::check_theta_stability(unsigned e, unsigned m) const {
  const MembershipModule& mod = module(e, m);
  const IdealSpec& ideal = mod.ideal();
  const auto side = static_cast<unsigned>(ideal.side());
  VerificationResult v;
  v.holds = true;
  std::ostringstream detail;

  for (unsigned n = 0; n < ideal.generators.size(); ++n) {
    LocalPoly g = theta_.local(ideal.generators[n]);
    LocalPoly tg = theta_.theta(g);
    for (const auto& [label, image] : {std::pair{"theta", tg}, std::pair{"psi", theta_.psi(g)}}) {
      VerificationResult r = membership_verdict(mod.is_member(image));
      if (!r.holds) {
        v.holds = false;
        detail << label << "(g_" << n << ") not in J; ";
      }
    }
    if (n < ideal.e) {
      // theta(p^{e-n} F_n) = p^{(e-n)p-1} F_n^p - p^{e-n-1} F_{n+1}
      const LocalRing& ring = theta_.local_ring();
      const auto p = static_cast<unsigned>(prime());
      LocalPoly expected =
          power(theta_.local(theta_.F(n)), p).scaled(LocalizedRational(ring, ipow(prime(), (ideal.e - n) * p - 1))) -
          theta_.local(theta_.F(n + 1)).scaled(LocalizedRational(ring, ipow(prime(), ideal.e - n - 1)));
      if (!(tg == expected)) {
        v.holds = false;
        detail << "theta(g_" << n << ") differs from its closed form; ";
      }
    }
    if (n == ideal.e && !(tg ==LocalPoly::monomial(theta_.local_ring(), {0, side}))) {
      v.holds = false;
      detail << "theta(F_e) != y^(p^e); ";
    }
    if (n == ideal.e + 1 && !tg.is_zero()) {
      v.holds = false;
      detail << "theta(y^(p^e)) != 0; ";
    }
  }
  v.detail = detail.str();
  return v;
}

VerificationResult ExampleRing::verify_prop2(unsigned e, unsigned m, unsigned k) const {
  if (k > e) throw std::invalid_argument("prop2 needs 0 <= k <= e");
  const MembershipModule& mod = module(e, m);
  LocalPoly x = LocalPoly::x(theta_.local_ring());
  LocalPoly target = theta_.psi_iterate(x, k).scaled(LocalizedRational(theta_.local_ring(), ipow(prime(), e - k)));
  return membership_verdict(mod.is_member(target));
}

VerificationResult ExampleRing::verify_prop3(unsigned e, unsigned m, unsigned k) const {
  if (e == 0 || k > e - 1) throw std::invalid_argument("prop3 needs 0 <= k <= e-1");
  const MembershipModule& mod = module(e, m);
  LocalPoly x = LocalPoly::x(theta_.local_ring());
  const unsigned exponent = nilpotence_exponent(e - k);
  LocalPoly target = power(x, nilpotence_exponent(e)) - power(theta_.psi_iterate(x, k), exponent);
  return membership_verdict(mod.is_member(target));
}

VerificationResult ExampleRing::verify_torsion_powers(unsigned e, unsigned m) const {
  const MembershipModule& mod = module(e, m);
  const ResidueRing& ring = mod.ring();
  VerificationResult v;
  v.holds = true;
  std::ostringstream detail;
  for (unsigned k = 1; k <= e; ++k) {
    // (p^{e-k} x)^N with N = p^k + p^{k-1}; p^k kills p^{e-k} x in A.
    const unsigned n = nilpotence_exponent(k);
    const Residue scale(ring, ipow(prime(), (e - k) * n));
    ResiduePoly target = ResiduePoly::monomial(ring, {n, 0}, scale);
    SpanVector reduced = mod.rewrite().power_of_x(n).scaled(scale.value());
    VerificationResult r = membership_verdict(mod.is_member_reduced(reduced, target));
    if (!r.holds) {
      v.holds = false;
      detail << "k=" << k << " failed; ";
    }
  }
  v.detail = detail.str();
  return v;
}

}  // namespace thetaring
