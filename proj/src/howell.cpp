#include "thetaring/howell.hpp"

#include <stdexcept>

namespace thetaring {

HowellBasis::HowellBasis(ResidueRing ring, std::size_t width, std::size_t payload_width)
    : ring_(ring), width_(width), payload_width_(payload_width), pivots_(width) {}

std::size_t HowellBasis::rank() const {
  std::size_t r = 0;
  for (const auto& row : pivots_)
    if (!row.empty()) ++r;
  return r;
}

void HowellBasis::normalize(Row& row, std::size_t pivot) const {
  const std::uint64_t a = row[pivot];
  const unsigned k = ring_.valuation(a);
  const std::uint64_t unit = a / ring_.power_of_p(k);
  if (unit == 1) return;
  const std::uint64_t inv = ring_.inverse(unit);
  for (std::size_t i = pivot; i < row.size(); ++i) row[i] = ring_.mul(row[i], inv);
}

void HowellBasis::subtract_multiple(Row& target, const Row& source, std::uint64_t factor, std::size_t from) const {
  if (factor == 0) return;
  const std::uint64_t n = ring_.modulus();
  const std::uint64_t neg = n - factor % n;
  for (std::size_t i = from; i < target.size(); ++i)
    if (source[i] != 0) target[i] = (target[i] + neg * source[i]) % n;
}

HowellBasis::Row HowellBasis::scaled(const Row& row, std::uint64_t factor) const {
  Row r(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) r[i] = ring_.mul(row[i], factor);
  return r;
}

bool HowellBasis::main_is_zero(const Row& row) const {
  for (std::size_t i = 0; i < width_; ++i)
    if (row[i] != 0) return false;
  return true;
}

bool HowellBasis::insert(Row row) {
  if (row.size() != width_ + payload_width_) throw std::invalid_argument("row has the wrong width");
  const unsigned m = ring_.exponent();
  bool grew = false;
  bool original = true;
  std::vector<Row> pending;
  pending.push_back(std::move(row));

  // Every placement lowers sum over columns of the pivot valuation (m when a
  // column is empty), so the loop terminates.
  while (!pending.empty()) {
    Row w = std::move(pending.back());
    pending.pop_back();
    for (std::size_t c = 0; c < width_; ++c) {
      if (w[c] == 0) continue;
      const unsigned kw = ring_.valuation(w[c]);
      Row& r = pivots_[c];
      if (r.empty()) {
        normalize(w, c);
        if (kw > 0) pending.push_back(scaled(w, ring_.power_of_p(m - kw)));
        r = std::move(w);
        grew |= original;
        break;
      }
      const unsigned kr = ring_.valuation(r[c]);
      if (kw >= kr) {
        subtract_multiple(w, r, w[c] / ring_.power_of_p(kr), c);
        continue;
      }
      // w has the smaller pivot valuation: it replaces r, and r minus the
      // matching multiple of w (zero in column c) is re-inserted.
      normalize(w, c);
      Row old = std::move(r);
      subtract_multiple(old, w, ring_.power_of_p(kr - kw), c);
      pending.push_back(std::move(old));
      pending.push_back(scaled(w, ring_.power_of_p(m - kw)));
      r = std::move(w);
      grew |= original;
      break;
    }
    original = false;
  }
  return grew;
}

void HowellBasis::canonicalize() {
  for (std::size_t c = 0; c < width_; ++c) {
    const Row& pr = pivots_[c];
    if (pr.empty()) continue;
    const std::uint64_t pivot = pr[c];
    for (std::size_t above = 0; above < c; ++above) {
      Row& r = pivots_[above];
      if (r.empty() || r[c] < pivot) continue;
      subtract_multiple(r, pr, r[c] / pivot, c);
    }
  }
}

HowellBasis::Reduction HowellBasis::reduce(std::span<const std::uint64_t> v) const {
  if (v.size() != width_) throw std::invalid_argument("vector has the wrong width");
  Row w(v.begin(), v.end());
  w.resize(width_ + payload_width_, 0);
  for (std::size_t c = 0; c < width_; ++c) {
    if (w[c] == 0 || pivots_[c].empty()) continue;
    const Row& r = pivots_[c];
    const std::uint64_t q = w[c] / r[c];
    subtract_multiple(w, r, q, c);
  }
  Reduction out;
  out.member = main_is_zero(w);
  out.remainder.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(width_));
  // Payload of w is minus the payload of what was subtracted.
  out.combination.reserve(payload_width_);
  for (std::size_t i = width_; i < w.size(); ++i) out.combination.push_back(ring_.neg(w[i]));
  return out;
}

std::vector<HowellBasis::Row> HowellBasis::rows() const {
  std::vector<Row> out;
  for (const auto& r : pivots_)
    if (!r.empty()) out.push_back(r);
  return out;
}

std::vector<HowellBasis::Row> HowellBasis::main_rows() const {
  std::vector<Row> out;
  for (const auto& r : pivots_)
    if (!r.empty()) out.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(width_));
  return out;
}

std::vector<std::size_t> HowellBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width_; ++c)
    if (!pivots_[c].empty()) out.push_back(c);
  return out;
}

}  // namespace thetaring
