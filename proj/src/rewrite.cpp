#include <stdexcept>

#include "thetaring/quotient.hpp"

namespace thetaring {

IdealSpec IdealSpec::make(const ThetaContext& theta, unsigned e) {
  if (e == 0) throw std::invalid_argument("ideal exponent e must be positive");
  IdealSpec spec;
  spec.p = theta.prime();
  spec.e = e;
  for (unsigned n = 0; n <= e; ++n) spec.generators.push_back(theta.F(n).scaled(ipow(spec.p, e - n)));
  spec.generators.push_back(IntPoly::monomial({}, {0, static_cast<unsigned>(spec.side())}));
  return spec;
}

std::size_t IdealSpec::side() const { return ipow(p, e).get_ui(); }

// ---------------------------------------------------------------------------

SpanVector::SpanVector(ResidueRing ring, std::size_t side, std::vector<std::uint64_t> values)
    : ring_(ring), side_(side), values_(std::move(values)) {
  if (values_.size() != side * side) throw std::invalid_argument("span vector has the wrong length");
  for (auto& v : values_) v %= ring_.modulus();
}

bool SpanVector::is_zero() const {
  for (auto v : values_)
    if (v != 0) return false;
  return true;
}

SpanVector& SpanVector::operator+=(const SpanVector& o) {
  if (!(ring_ == o.ring_) || side_ != o.side_) throw std::invalid_argument("mismatched span vectors");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = ring_.add(values_[i], o.values_[i]);
  return *this;
}

SpanVector& SpanVector::operator-=(const SpanVector& o) {
  if (!(ring_ == o.ring_) || side_ != o.side_) throw std::invalid_argument("mismatched span vectors");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = ring_.sub(values_[i], o.values_[i]);
  return *this;
}

SpanVector SpanVector::scaled(std::uint64_t c) const {
  SpanVector r = *this;
  c %= ring_.modulus();
  for (auto& v : r.values_) v = ring_.mul(v, c);
  return r;
}

ResiduePoly SpanVector::to_polynomial() const {
  ResiduePoly f(ring_);
  for (std::size_t j = 0; j < side_; ++j)
    for (std::size_t i = 0; i < side_; ++i)
      if (auto c = at(i, j); c != 0)
        f.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, Residue(ring_, c));
  return f;
}

// ---------------------------------------------------------------------------

RewriteSystem::RewriteSystem(const IdealSpec& ideal, ResidueRing ring) : ring_(ring), side_(ideal.side()) {
  if (ring.prime() != ideal.p) throw std::invalid_argument("modulus prime differs from the ideal's prime");
  const IntPoly& fe = ideal.generators.at(ideal.e);
  for (const auto& [m, c] : fe.terms()) {
    if (m.x == side_ && m.y == 0) {
      if (c != 1) throw std::logic_error("F_e is not monic");
      continue;
    }
    if (m.x >= side_) throw std::logic_error("F_e has a non-leading term of x-degree >= p^e");
    std::uint64_t coeff = ring_.neg(ring_.reduce(c));
    if (coeff != 0) tail_.push_back({m.x, m.y, coeff});
  }
}

SpanVector RewriteSystem::one() const {
  SpanVector v = zero();
  v.at(0, 0) = 1 % ring_.modulus();
  return v;
}

SpanVector RewriteSystem::fold(std::vector<std::vector<std::uint64_t>>& grid, ResiduePoly* fe_cofactor,
                               ResiduePoly* y_cofactor) const {
  for (std::size_t i = grid.size(); i-- > side_;) {
    const std::size_t shift = i - side_;
    for (std::size_t j = side_; j-- > 0;) {
      const std::uint64_t c = grid[i][j];
      if (c == 0) continue;
      grid[i][j] = 0;
      if (fe_cofactor)
        fe_cofactor->add_term({static_cast<unsigned>(shift), static_cast<unsigned>(j)}, Residue(ring_, c));
      for (const auto& t : tail_) {
        const std::uint64_t add = ring_.mul(c, t.coeff);
        if (j + t.y >= side_) {
          if (y_cofactor)
            y_cofactor->add_term(
                {static_cast<unsigned>(shift + t.x), static_cast<unsigned>(j + t.y - side_)}, Residue(ring_, add));
          continue;
        }
        auto& cell = grid[shift + t.x][j + t.y];
        cell = ring_.add(cell, add);
      }
    }
  }
  SpanVector v = zero();
  for (std::size_t i = 0; i < std::min(grid.size(), side_); ++i)
    for (std::size_t j = 0; j < side_; ++j) v.at(i, j) = grid[i][j];
  return v;
}

RewriteSystem::Reduction RewriteSystem::reduce(const ResiduePoly& f) const {
  if (!(f.ring() == ring_)) throw std::invalid_argument("mismatched coefficient rings");
  Reduction out{zero(), ResiduePoly(ring_), ResiduePoly(ring_)};
  std::vector<std::vector<std::uint64_t>> grid(std::max<std::size_t>(f.degree_x() + 1, side_),
                                               std::vector<std::uint64_t>(side_, 0));
  for (const auto& [m, c] : f.terms()) {
    if (m.y >= side_) {
      out.y_cofactor.add_term({m.x, static_cast<unsigned>(m.y - side_)}, c);
      continue;
    }
    grid[m.x][m.y] = c.value();
  }
  out.vector = fold(grid, &out.fe_cofactor, &out.y_cofactor);
  return out;
}

SpanVector RewriteSystem::reduce_vector(const ResiduePoly& f) const {
  if (!(f.ring() == ring_)) throw std::invalid_argument("mismatched coefficient rings");
  std::vector<std::vector<std::uint64_t>> grid(std::max<std::size_t>(f.degree_x() + 1, side_),
                                               std::vector<std::uint64_t>(side_, 0));
  for (const auto& [m, c] : f.terms())
    if (m.y < side_) grid[m.x][m.y] = c.value();
  return fold(grid, nullptr, nullptr);
}

SpanVector RewriteSystem::multiply_x(const SpanVector& v) const {
  SpanVector r = zero();
  for (std::size_t j = 0; j < side_; ++j)
    for (std::size_t i = 0; i + 1 < side_; ++i) r.at(i + 1, j) = v.at(i, j);
  // x * x^{side-1} y^j = x^{side} y^j -> tail * y^j
  for (std::size_t j = 0; j < side_; ++j) {
    const std::uint64_t c = v.at(side_ - 1, j);
    if (c == 0) continue;
    for (const auto& t : tail_) {
      if (j + t.y >= side_) continue;
      auto& cell = r.at(t.x, j + t.y);
      cell = ring_.add(cell, ring_.mul(c, t.coeff));
    }
  }
  return r;
}

SpanVector RewriteSystem::multiply_y(const SpanVector& v) const {
  SpanVector r = zero();
  for (std::size_t j = 0; j + 1 < side_; ++j)
    for (std::size_t i = 0; i < side_; ++i) r.at(i, j + 1) = v.at(i, j);
  return r;
}

SpanVector RewriteSystem::multiply(const SpanVector& a, const SpanVector& b) const {
  std::vector<std::vector<std::uint64_t>> grid(2 * side_ - 1, std::vector<std::uint64_t>(side_, 0));
  for (std::size_t ja = 0; ja < side_; ++ja)
    for (std::size_t ia = 0; ia < side_; ++ia) {
      const std::uint64_t ca = a.at(ia, ja);
      if (ca == 0) continue;
      for (std::size_t jb = 0; ja + jb < side_; ++jb)
        for (std::size_t ib = 0; ib < side_; ++ib) {
          const std::uint64_t cb = b.at(ib, jb);
          if (cb == 0) continue;
          auto& cell = grid[ia + ib][ja + jb];
          cell = ring_.add(cell, ring_.mul(ca, cb));
        }
    }
  return fold(grid, nullptr, nullptr);
}

SpanVector RewriteSystem::power_of_x(unsigned n) const {
  SpanVector v = one();
  for (unsigned i = 0; i < n; ++i) v = multiply_x(v);
  return v;
}

SpanVector RewriteSystem::power(const SpanVector& v, unsigned n) const {
  SpanVector r = one();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, v);
  return r;
}

}  // namespace thetaring
