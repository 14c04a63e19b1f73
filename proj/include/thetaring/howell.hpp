#ifndef THETARING_HOWELL_HPP
#define THETARING_HOWELL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "thetaring/coefficients.hpp"

namespace thetaring {

/// Row basis in Howell normal form for a submodule of (Z/p^m)^width.
///
/// Each row carries an opaque payload of `payload_width` residues that is
/// transformed by exactly the same row operations as the row itself. Callers
/// use it to track how a row was produced from the inserted vectors.
///
/// Normal form (after canonicalize()):
///   - at most one row per pivot column, pivot entry equal to p^k with k < m;
///   - entries above a pivot p^k lie in [0, p^k);
///   - Howell property: every span element whose first c entries vanish is a
///     combination of rows with pivot column >= c.
/// Two bases with the same row span canonicalize to identical rows.
class HowellBasis {
 public:
  using Row = std::vector<std::uint64_t>;

  HowellBasis(ResidueRing ring, std::size_t width, std::size_t payload_width = 0);

  const ResidueRing& ring() const { return ring_; }
  std::size_t width() const { return width_; }
  std::size_t payload_width() const { return payload_width_; }
  std::size_t rank() const;

  /// Adds a vector (width + payload_width entries) to the spanning set.
  /// Returns true iff the row span strictly grew. Leaves the basis in echelon
  /// form with the Howell property; call canonicalize() before comparing.
  bool insert(Row row);

  /// Reduces entries above the pivots.
  void canonicalize();

  struct Reduction {
    Row remainder;    // canonical coset representative, width entries
    Row combination;  // payload of the subtracted span element
    bool member = false;
  };
  Reduction reduce(std::span<const std::uint64_t> v) const;
  bool contains(std::span<const std::uint64_t> v) const { return reduce(v).member; }

  /// Rows in pivot order, full width including payload.
  std::vector<Row> rows() const;
  /// Rows in pivot order, main part only.
  std::vector<Row> main_rows() const;
  std::vector<std::size_t> pivot_columns() const;

 private:
  void normalize(Row& row, std::size_t pivot) const;
  void subtract_multiple(Row& target, const Row& source, std::uint64_t factor, std::size_t from) const;
  Row scaled(const Row& row, std::uint64_t factor) const;
  bool main_is_zero(const Row& row) const;

  ResidueRing ring_;
  std::size_t width_;
  std::size_t payload_width_;
  std::vector<Row> pivots_;  // pivots_[c] empty when column c has no pivot row
};

}  // namespace thetaring

#endif  // THETARING_HOWELL_HPP
