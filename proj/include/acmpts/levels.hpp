#pragma once

// Level sets with respect to a projection pi_i: the i-level set X_j is the
// part of X on the grid hyperplane A_{i,j}.

#include <span>
#include <vector>

#include "acmpts/grid.hpp"

namespace acmpts {

struct Level {
  int index = 0;                  // j
  std::vector<GridPoint> points;  // X_j, in the coordinates of X
};

struct LevelDecomposition {
  int direction = 0;
  std::vector<Level> levels;  // ordered by index, all nonempty
};

/// Partition of X by the i-th coordinate. Throws BadDirection.
LevelDecomposition level_sets(const PointSet& X, int i);

/// X_j as a configuration of its own (recanonicalized). Throws BadDirection
/// or BadLevel.
PointSet level_subset(const PointSet& X, int i, int j);

/// Inclusion property with respect to pi_i: the projected level sets form a
/// chain under inclusion and each is ACM in (P^1)^{n-1}. Requires n >= 2.
bool inclusion_property(const PointSet& X, int i);

/// X minus its i-level set X_j, recanonicalized. Throws BadDirection,
/// BadLevel, or WouldBeEmpty when X has a single i-level.
PointSet remove_level(const PointSet& X, int i, int j);

/// Union of the i-level sets with the given indices, recanonicalized (may be
/// empty). Throws BadDirection or BadLevel.
PointSet union_of_levels(const PointSet& X, int i, std::span<const int> levels);

/// Points of the other i-levels lying over the shadow pi_i(X_j):
/// { p in X \ X_j : pi_i(p) in pi_i(X_j) }. May be empty.
PointSet interface_set(const PointSet& X, int i, int j);

/// Largest number of points of X on one grid hyperplane.
int max_level_size(const PointSet& X);

}  // namespace acmpts
