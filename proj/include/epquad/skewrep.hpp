#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "epquad/quadop.hpp"

namespace epquad {

struct FreeEntryAssignment {
  int sub = 0, row = 0, col = 0;  // 0-based, all three distinct
  double value = 0.0;
};

/// Values for the freely selectable entries of the skew-block representation:
/// at most one assignment per unordered index triple {i, j, k} with distinct
/// indices; unlisted triples default to 0 at the canonical slot
/// (sub = i, row = j, col = k) for i < j < k.
class FreeEntrySpec {
 public:
  FreeEntrySpec() = default;

  /// Registers h~ at (sub, row, col) = value. Throws std::invalid_argument if
  /// indices repeat or the triple already has an assignment.
  void assign(int sub, int row, int col, double value);

  std::optional<FreeEntryAssignment> lookup(int i, int j, int k) const;

  std::size_t size() const { return entries_.size(); }

  /// All indices must lie in [0, n).
  void validate_for_dimension(int n) const;

  /// File format: lines "i j k value" with 1-based indices, '#' comments.
  static FreeEntrySpec parse_file(const std::string& path);

 private:
  std::map<std::array<int, 3>, FreeEntryAssignment> entries_;
};

/// Transforms an energy-preserving H into the equivalent representation with
/// every sub-matrix skew-symmetric. Entries with all indices distinct take
/// the free values from `spec`; sub-matrix diagonals vanish; the rest is
/// propagated deterministically from the input's pair sums.
///
/// Throws PreconditionError when H fails the energy-preservation check at
/// 1e-9 relative tolerance.
QuadOp to_skew_block(const QuadOp& H, const FreeEntrySpec& spec = {});

/// Alternative representation with skew-symmetry across the rows of the
/// different sub-matrices: h~_{i_{k,j}} = -h~_{k_{i,j}}. Leaves the
/// non-repeated coefficients h_{i_{j,i}} unchanged.
QuadOp to_row_skew(const QuadOp& H);

/// max over all (i, k, j) of |h_{i_{k,j}} + h_{k_{i,j}}| — zero iff H has the
/// row-skew structure.
double max_row_skew_violation(const QuadOp& H);

/// Draws a deterministic random energy-preserving operator: a skew-block
/// matrix whose pair sums are then redistributed by random splits, which
/// keeps the induced quadratic map (hence energy preservation) while
/// destroying the skew structure of the blocks.
QuadOp random_energy_preserving(int n, std::uint64_t seed);

inline QuadOp scramble_equivalent(int n, std::uint64_t seed) {
  return random_energy_preserving(n, seed);
}

/// Number of freely selectable entries of the skew-block representation:
/// n^3/6 - n^2/2 + n/3 = C(n, 3).
std::int64_t free_entry_count(int n);

}  // namespace epquad
