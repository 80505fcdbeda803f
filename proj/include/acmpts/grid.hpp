#pragma once

// Combinatorial model of finite point sets in (P^1)^n.
//
// A point is stored by the indices of the grid hyperplanes it lies on: the
// point with coords (u_1,...,u_n) is the intersection of A_{1,u_1},...,
// A_{n,u_n}. Directions and levels are 1-based throughout the public API,
// matching the usual A_{i,j} indexing.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace acmpts {

struct GridPoint {
  std::vector<int> coords;

  GridPoint() = default;
  explicit GridPoint(std::vector<int> c) : coords(std::move(c)) {}
  GridPoint(std::initializer_list<int> c) : coords(c) {}

  int dimension() const noexcept { return static_cast<int>(coords.size()); }

  auto operator<=>(const GridPoint&) const = default;
  bool operator==(const GridPoint&) const = default;
};

using MultiDegree = std::vector<int>;

std::string to_string(const GridPoint& p);

/// Level index of `p` in direction `i` (1-based). Throws BadDirection.
int coordinate(const GridPoint& p, int i);

/// Row-major (direction 1 slowest) indexing of the full box
/// {1..r_1} x ... x {1..r_n}; index order equals lexicographic order.
class GridShape {
 public:
  GridShape() = default;
  explicit GridShape(std::vector<int> dims);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int n() const noexcept { return static_cast<int>(dims_.size()); }
  std::size_t size() const noexcept { return size_; }
  /// Index offset of a unit step in direction k+1 (0-based k).
  std::size_t stride(int k) const noexcept { return strides_[k]; }

  std::size_t index(const GridPoint& p) const;
  GridPoint point(std::size_t index) const;

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// A finite configuration X in canonical form: points are distinct and
/// sorted, and every level 1..r_i of every direction is used by some point.
/// The only non-canonical value is the empty configuration, which arises
/// from set operations (e.g. an empty interface set).
class PointSet {
 public:
  PointSet() = default;

  /// Empty configuration in (P^1)^n.
  static PointSet empty(int n);

  int n() const noexcept { return n_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<GridPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool is_empty() const noexcept { return points_.empty(); }

  bool contains(const GridPoint& p) const;
  GridShape shape() const { return GridShape(dims_); }
  /// Number of cells of the full grid, prod r_i.
  std::size_t grid_size() const;

  bool operator==(const PointSet&) const = default;

 private:
  friend PointSet canonical_subset(int n, std::span<const GridPoint> points);
  PointSet(int n, std::vector<int> dims, std::vector<GridPoint> points)
      : n_(n), dims_(std::move(dims)), points_(std::move(points)) {}

  int n_ = 0;
  std::vector<int> dims_;
  std::vector<GridPoint> points_;
};

/// Merge duplicates and relabel each direction's used values to 1..r_i in
/// increasing order. Throws EmptyConfiguration or DimensionMismatch.
PointSet canonicalize(std::span<const std::vector<int>> raw);
PointSet canonicalize(std::span<const GridPoint> raw);

/// Like canonicalize, but an empty input yields PointSet::empty(n). All
/// points must have dimension n.
PointSet canonical_subset(int n, std::span<const GridPoint> points);

/// Image of X under deletion of coordinate i (pi_i), canonicalized.
/// Requires n >= 2. Throws BadDirection.
PointSet project(const PointSet& X, int i);

/// `direction_perm[k]` is the new direction of old direction k+1;
/// `level_perms[k][j-1]` is the new level of old level j in old direction
/// k+1. An empty `level_perms` means identity levels. Throws BadPermutation.
PointSet relabel(const PointSet& X, std::span<const int> direction_perm,
                 std::span<const std::vector<int>> level_perms = {});

/// The point with coordinate i deleted (not canonicalized).
GridPoint drop_coordinate(const GridPoint& p, int i);

}  // namespace acmpts
