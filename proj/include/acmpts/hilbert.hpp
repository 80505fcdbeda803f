#pragma once

// Multigraded Hilbert functions of point sets in (P^1)^n.
//
// Level j in any direction is the point [j:1] of P^1. Then h_X(t) is the
// rank of the evaluation matrix whose row for p and column for exponents
// (a_1..a_n), 0 <= a_i <= t_i, holds prod_i p_i^{a_i}. Ranks are exact.

#include <cstdint>
#include <span>
#include <vector>

#include "acmpts/grid.hpp"

namespace acmpts {

/// Values indexed by the multidegrees 0 <= t <= box (componentwise).
class GradedTable {
 public:
  GradedTable() = default;
  explicit GradedTable(MultiDegree box);

  const MultiDegree& box() const noexcept { return box_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Throws BadDegree outside the box.
  std::int64_t at(const MultiDegree& t) const;
  /// 0 when any entry of t is negative; throws BadDegree above the box.
  std::int64_t value_or_zero(const MultiDegree& t) const;

  std::int64_t& operator[](std::size_t flat) { return values_[flat]; }
  std::int64_t operator[](std::size_t flat) const { return values_[flat]; }
  MultiDegree degree_at(std::size_t flat) const;
  std::size_t flat_index(const MultiDegree& t) const;

  bool operator==(const GradedTable&) const = default;

 private:
  MultiDegree box_;
  std::vector<std::int64_t> values_;
};

struct HilbertTable : GradedTable {
  using GradedTable::GradedTable;
};

/// First difference: sum over S of (-1)^|S| h(t - chi_S), h = 0 in negative
/// degrees.
struct DeltaTable : GradedTable {
  using GradedTable::GradedTable;
};

/// Hilbert function of an explicit point list whose coordinates are used as
/// evaluation nodes as given (no relabeling). Duplicates are ignored; an
/// empty list has h = 0. Throws BadDegree or DimensionMismatch.
std::int64_t hilbert_value(std::span<const GridPoint> points, const MultiDegree& t);
std::int64_t hilbert_value(const PointSet& X, const MultiDegree& t);

/// Table over 0 <= t <= box; cells are computed under OpenMP.
HilbertTable hilbert_table(std::span<const GridPoint> points, const MultiDegree& box);
HilbertTable hilbert_table(const PointSet& X, const MultiDegree& box);
/// Single-threaded reference for hilbert_table.
HilbertTable hilbert_table_serial(std::span<const GridPoint> points, const MultiDegree& box);

DeltaTable delta_of(const HilbertTable& h);
DeltaTable delta_table(const PointSet& X, const MultiDegree& box);

}  // namespace acmpts
