#ifndef THETARING_QUOTIENT_HPP
#define THETARING_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "thetaring/certificate.hpp"
#include "thetaring/howell.hpp"
#include "thetaring/theta.hpp"

namespace thetaring {

/// The ideal J of Z[x,y] generated by g_n = p^{e-n} F_n(x,y) for
/// 0 <= n <= e and g_{e+1} = y^{p^e}.
struct IdealSpec {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::vector<IntPoly> generators;

  static IdealSpec make(const ThetaContext& theta, unsigned e);

  /// p^e: side length of the span grid.
  std::size_t side() const;
};

/// Coefficients over Z/p^m of the span monomials x^i y^j, 0 <= i, j < p^e,
/// stored at index j * p^e + i.
class SpanVector {
 public:
  SpanVector(ResidueRing ring, std::size_t side)
      : ring_(ring), side_(side), values_(side * side, 0) {}
  SpanVector(ResidueRing ring, std::size_t side, std::vector<std::uint64_t> values);

  const ResidueRing& ring() const { return ring_; }
  std::size_t side() const { return side_; }
  std::size_t size() const { return values_.size(); }
  static std::size_t index(std::size_t i, std::size_t j, std::size_t side) { return j * side + i; }

  std::uint64_t at(std::size_t i, std::size_t j) const { return values_[index(i, j, side_)]; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return values_[index(i, j, side_)]; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  std::vector<std::uint64_t>& values() { return values_; }

  bool is_zero() const;
  SpanVector& operator+=(const SpanVector& o);
  SpanVector& operator-=(const SpanVector& o);
  SpanVector scaled(std::uint64_t c) const;
  friend SpanVector operator+(SpanVector a, const SpanVector& b) { return a += b; }
  friend SpanVector operator-(SpanVector a, const SpanVector& b) { return a -= b; }
  bool operator==(const SpanVector& o) const {
    return ring_ == o.ring_ && side_ == o.side_ && values_ == o.values_;
  }

  /// The span-basis polynomial sum c_ij x^i y^j.
  ResiduePoly to_polynomial() const;

 private:
  ResidueRing ring_;
  std::size_t side_;
  std::vector<std::uint64_t> values_;
};

/// Normal forms modulo (F_e(x,y), y^{p^e}) over Z/p^m.
///
/// Rules: monomials with y-degree >= p^e vanish; x^{p^e} is replaced by
/// x^{p^e} - F_e(x,y). Monomials are rewritten in descending x-degree. Since
/// F_e is monic in x with lower terms of x-degree < p^e, each step lowers the
/// largest x-degree present and the process stops on the span grid.
class RewriteSystem {
 public:
  RewriteSystem(const IdealSpec& ideal, ResidueRing ring);

  const ResidueRing& ring() const { return ring_; }
  std::size_t side() const { return side_; }
  std::size_t dimension() const { return side_ * side_; }

  struct Reduction {
    SpanVector vector;
    ResiduePoly fe_cofactor;  // multiple of F_e subtracted
    ResiduePoly y_cofactor;   // multiple of y^{p^e} dropped
  };
  /// f = vector + fe_cofactor * F_e + y_cofactor * y^{p^e} over Z/p^m.
  Reduction reduce(const ResiduePoly& f) const;
  SpanVector reduce_vector(const ResiduePoly& f) const;

  SpanVector zero() const { return SpanVector(ring_, side_); }
  SpanVector one() const;
  SpanVector multiply_x(const SpanVector& v) const;
  SpanVector multiply_y(const SpanVector& v) const;
  SpanVector multiply(const SpanVector& a, const SpanVector& b) const;
  /// red(x^n) by repeated multiply-then-reduce.
  SpanVector power_of_x(unsigned n) const;
  SpanVector power(const SpanVector& v, unsigned n) const;

 private:
  struct TailTerm {
    std::size_t x;
    std::size_t y;
    std::uint64_t coeff;  // x^{p^e} == sum coeff * x^x y^y
  };
  /// Folds a dense grid (x-degree rows, y < side) onto the span.
  SpanVector fold(std::vector<std::vector<std::uint64_t>>& grid, ResiduePoly* fe_cofactor,
                  ResiduePoly* y_cofactor) const;

  ResidueRing ring_;
  std::size_t side_;
  std::vector<TailTerm> tail_;
};

struct MembershipResult {
  bool member = false;
  std::optional<Certificate> certificate;  // set when member
  SpanVector witness;                      // canonical residue; zero iff member
};

/// The submodule T = red(J) of the span over Z/p^m, kept as a Howell basis.
/// Each row's payload holds span elements c_0..c_{e-1} with
/// row = sum_n c_n * red(g_n) in the quotient ring, which is enough to
/// rebuild explicit cofactors.
class MembershipModule {
 public:
  static MembershipModule build(const ThetaContext& theta, unsigned e, unsigned m);

  const IdealSpec& ideal() const { return ideal_; }
  const RewriteSystem& rewrite() const { return rewrite_; }
  const HowellBasis& basis() const { return basis_; }
  const ResidueRing& ring() const { return rewrite_.ring(); }
  unsigned modulus_exponent() const { return ring().exponent(); }
  /// Closure rounds until the span stopped growing.
  unsigned generations() const { return generations_; }
  std::vector<SpanVector> basis_vectors() const;

  bool contains(const SpanVector& v) const;
  /// The target is kept for the certificate; membership is decided on v.
  MembershipResult is_member_reduced(const SpanVector& v, const ResiduePoly& target) const;
  MembershipResult is_member(const ResiduePoly& f) const;
  MembershipResult is_member(const IntPoly& f) const;
  MembershipResult is_member(const LocalPoly& f) const;

 private:
  MembershipModule(IdealSpec ideal, RewriteSystem rewrite, HowellBasis basis)
      : ideal_(std::move(ideal)), rewrite_(std::move(rewrite)), basis_(std::move(basis)) {}
  std::vector<std::uint64_t> augmented(const SpanVector& v, const std::vector<SpanVector>& payload) const;
  Certificate assemble_certificate(const std::vector<std::uint64_t>& combination, const ResiduePoly& target) const;

  IdealSpec ideal_;
  RewriteSystem rewrite_;
  HowellBasis basis_;
  unsigned generations_ = 0;
};

/// Independent membership oracle: enumerates every element of T by
/// breadth-first closure (addition, multiply-by-x/y then reduce). No Howell
/// code. Only for p^{2e} <= 16 and p^m <= 16.
class BruteForceModule {
 public:
  BruteForceModule(const ThetaContext& theta, unsigned e, unsigned m, std::size_t element_limit = 1u << 22);

  std::size_t size() const { return elements_.size(); }
  bool contains(const SpanVector& v) const;
  const RewriteSystem& rewrite() const { return rewrite_; }

 private:
  static std::string key(const std::vector<std::uint64_t>& v);

  IdealSpec ideal_;
  RewriteSystem rewrite_;
  std::unordered_set<std::string> elements_;
};

bool brute_force_membership_oracle(const ThetaContext& theta, unsigned e, unsigned m, const ResiduePoly& f);

struct VerificationResult {
  bool holds = false;
  std::optional<Certificate> certificate;
  std::optional<SpanVector> witness;
  std::string detail;
};

/// The quotient A = Z_(p)[x,y]/J for a fixed prime, with one membership
/// module per (e, m), built on first use.
class ExampleRing {
 public:
  explicit ExampleRing(std::uint64_t p) : theta_(p) {}

  std::uint64_t prime() const { return theta_.prime(); }
  const ThetaContext& theta() const { return theta_; }
  const MembershipModule& module(unsigned e, unsigned m) const;

  /// p^e + p^{e-1}
  unsigned nilpotence_exponent(unsigned e) const;

  VerificationResult verify_nilpotence(unsigned e, unsigned m) const;
  VerificationResult verify_sharpness(unsigned e) const;
  VerificationResult check_theta_stability(unsigned e, unsigned m) const;
  VerificationResult verify_prop2(unsigned e, unsigned m, unsigned k) const;
  VerificationResult verify_prop3(unsigned e, unsigned m, unsigned k) const;
  VerificationResult verify_torsion_powers(unsigned e, unsigned m) const;

 private:
  VerificationResult membership_verdict(const MembershipResult& r) const;

  ThetaContext theta_;
  mutable std::mutex modules_mutex_;
  mutable std::map<std::pair<unsigned, unsigned>, std::unique_ptr<MembershipModule>> modules_;
};

}  // namespace thetaring

#endif  // THETARING_QUOTIENT_HPP
