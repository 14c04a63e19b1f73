#include <stdexcept>

#include "thetaring/quotient.hpp"

namespace thetaring {

namespace {

struct FrontierItem {
  SpanVector vector;
  std::vector<SpanVector> payload;  // c_0..c_{e-1}
};

}  // namespace

std::vector<std::uint64_t> MembershipModule::augmented(const SpanVector& v,
                                                       const std::vector<SpanVector>& payload) const {
  std::vector<std::uint64_t> row(v.values());
  row.reserve(v.size() * (payload.size() + 1));
  for (const auto& block : payload) row.insert(row.end(), block.values().begin(), block.values().end());
  return row;
}

MembershipModule MembershipModule::build(const ThetaContext& theta, unsigned e, unsigned m) {
  IdealSpec ideal = IdealSpec::make(theta, e);
  ResidueRing ring(ideal.p, m);
  RewriteSystem rewrite(ideal, ring);
  const std::size_t dim = rewrite.dimension();
  MembershipModule module(ideal, rewrite, HowellBasis(ring, dim, e * dim));
  const RewriteSystem& rw = module.rewrite_;

  std::vector<FrontierItem> frontier;
  for (unsigned n = 0; n < ideal.generators.size(); ++n) {
    SpanVector seed = rw.reduce_vector(to_residue(ideal.generators[n], ring));
    if (n >= e) {
      // F_e and y^{p^e} are the rewrite rules themselves.
      if (!seed.is_zero()) throw std::logic_error("rewrite rule generator does not reduce to zero");
      continue;
    }
    std::vector<SpanVector> payload(e, rw.zero());
    payload[n] = rw.one();
    if (module.basis_.insert(module.augmented(seed, payload))) frontier.push_back({seed, std::move(payload)});
  }

  // Span(T_k + x*T_k + y*T_k) only needs the multiples of what entered T_k
  // in the previous round.
  while (!frontier.empty()) {
    ++module.generations_;
    std::vector<FrontierItem> next;
    for (const auto& item : frontier) {
      for (int var = 0; var < 2; ++var) {
        auto mult = [&](const SpanVector& v) { return var == 0 ? rw.multiply_x(v) : rw.multiply_y(v); };
        FrontierItem moved{mult(item.vector), {}};
        if (moved.vector.is_zero()) continue;
        moved.payload.reserve(e);
        for (const auto& block : item.payload) moved.payload.push_back(mult(block));
        if (module.basis_.insert(module.augmented(moved.vector, moved.payload))) next.push_back(std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  module.basis_.canonicalize();
  return module;
}

std::vector<SpanVector> MembershipModule::basis_vectors() const {
  std::vector<SpanVector> out;
  for (auto& row : basis_.main_rows()) out.emplace_back(ring(), rewrite_.side(), std::move(row));
  return out;
}

bool MembershipModule::contains(const SpanVector& v) const { return basis_.contains(v.values()); }

Certificate MembershipModule::assemble_certificate(const std::vector<std::uint64_t>& combination,
                                                   const ResiduePoly& target) const {
  const unsigned e = ideal_.e;
  const std::size_t dim = rewrite_.dimension();
  const ResidueRing& r = ring();

  Certificate cert;
  cert.p = ideal_.p;
  cert.e = e;
  cert.m = r.exponent();
  cert.target = lift(target);

  ResiduePoly rest = target;
  for (unsigned n = 0; n < e; ++n) {
    std::vector<std::uint64_t> block(combination.begin() + static_cast<std::ptrdiff_t>(n * dim),
                                     combination.begin() + static_cast<std::ptrdiff_t>((n + 1) * dim));
    ResiduePoly h = SpanVector(r, rewrite_.side(), std::move(block)).to_polynomial();
    if (h.is_zero()) continue;
    rest -= h * to_residue(ideal_.generators[n], r);
    cert.cofactors.push_back({n, lift(h)});
  }
  // What remains lies in (F_e, y^{p^e}) and the rewrite records the cofactors.
  RewriteSystem::Reduction tail = rewrite_.reduce(rest);
  if (!tail.vector.is_zero()) throw std::logic_error("certificate assembly left a nonzero residue");
  if (!tail.fe_cofactor.is_zero()) cert.cofactors.push_back({e, lift(tail.fe_cofactor)});
  if (!tail.y_cofactor.is_zero()) cert.cofactors.push_back({e + 1, lift(tail.y_cofactor)});
  return cert;
}

MembershipResult MembershipModule::is_member_reduced(const SpanVector& v, const ResiduePoly& target) const {
  HowellBasis::Reduction red = basis_.reduce(v.values());
  MembershipResult out{red.member, std::nullopt, SpanVector(ring(), rewrite_.side(), std::move(red.remainder))};
  if (out.member) out.certificate = assemble_certificate(red.combination, target);
  return out;
}

MembershipResult MembershipModule::is_member(const ResiduePoly& f) const {
  return is_member_reduced(rewrite_.reduce_vector(f), f);
}

MembershipResult MembershipModule::is_member(const IntPoly& f) const { return is_member(to_residue(f, ring())); }

MembershipResult MembershipModule::is_member(const LocalPoly& f) const { return is_member(to_residue(f, ring())); }

// ---------------------------------------------------------------------------

BruteForceModule::BruteForceModule(const ThetaContext& theta, unsigned e, unsigned m, std::size_t element_limit)
    : ideal_(IdealSpec::make(theta, e)), rewrite_(ideal_, ResidueRing(theta.prime(), m)) {
  const std::size_t dim = rewrite_.dimension();
  if (dim > 16 || rewrite_.ring().modulus() > 16) throw std::invalid_argument("instance too large for oracle");
  const ResidueRing& ring = rewrite_.ring();

  std::vector<std::vector<std::uint64_t>> gens;
  auto known = [&](const std::vector<std::uint64_t>& v) { return elements_.count(key(v)) != 0; };
  for (const auto& g : ideal_.generators) {
    SpanVector s = rewrite_.reduce_vector(to_residue(g, ring));
    if (!s.is_zero()) gens.push_back(s.values());
  }

  for (;;) {
    elements_.clear();
    std::vector<std::vector<std::uint64_t>> queue{std::vector<std::uint64_t>(dim, 0)};
    elements_.insert(key(queue.front()));
    while (!queue.empty()) {
      std::vector<std::uint64_t> t = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : gens) {
        std::vector<std::uint64_t> sum(dim);
        for (std::size_t i = 0; i < dim; ++i) sum[i] = ring.add(t[i], g[i]);
        if (elements_.insert(key(sum)).second) {
          if (elements_.size() > element_limit) throw std::invalid_argument("instance too large for oracle");
          queue.push_back(std::move(sum));
        }
      }
    }
    std::vector<std::vector<std::uint64_t>> fresh;
    for (const auto& g : gens) {
      SpanVector v(ring, rewrite_.side(), g);
      for (const SpanVector& w : {rewrite_.multiply_x(v), rewrite_.multiply_y(v)})
        if (!known(w.values())) fresh.push_back(w.values());
    }
    if (fresh.empty()) break;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
  }
}

std::string BruteForceModule::key(const std::vector<std::uint64_t>& v) {
  std::string k(v.size(), '\0');
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = static_cast<char>(v[i]);
  return k;
}

bool BruteForceModule::contains(const SpanVector& v) const { return elements_.count(key(v.values())) != 0; }

bool brute_force_membership_oracle(const ThetaContext& theta, unsigned e, unsigned m, const ResiduePoly& f) {
  BruteForceModule oracle(theta, e, m);
  return oracle.contains(oracle.rewrite().reduce_vector(f));
}

}  // namespace thetaring
