#pragma once

// The (star_s) property and the ACM test for points in (P^1)^n.
//
// For two grid points P, Q the least-degree complete intersection through
// both, Y_{P,Q}, is generated by A_{i,P_i} where P_i = Q_i and by
// A_{i,P_i} A_{i,Q_i} where they differ. Its points form the coordinate box
// {u : u_i in {P_i, Q_i}}, so everything here is decided by counting box
// corners against X.

#include <utility>
#include <vector>

#include "acmpts/grid.hpp"

namespace acmpts {

enum class WitnessKind {
  type_i,   // P, Q in X and the box meets X only in {P, Q}
  type_ii,  // P, Q not in X and every other box corner is in X
};

struct Witness {
  WitnessKind kind;
  GridPoint p;
  GridPoint q;
  int s_prime = 0;  // = d(P, Q), the number of degree-2 generators of Y_{P,Q}
  std::vector<GridPoint> box;
};

struct StarVerdict {
  bool satisfied = true;
  std::vector<Witness> witnesses;  // lexicographically ordered by (P, Q)
};

enum class WitnessScan { first, exhaustive };

/// Number of coordinates in which u and v differ. Throws DimensionMismatch.
int hamming_distance(const GridPoint& u, const GridPoint& v);

/// The 2^{d(P,Q)} corners of Y_{P,Q}, sorted.
std::vector<GridPoint> combinatorial_box(const GridPoint& p, const GridPoint& q);

/// Decide (star_s) for 2 <= s <= n. On failure the least witness is returned
/// (all witnesses with WitnessScan::exhaustive). The pair scan runs under
/// OpenMP; the result is identical to check_star_serial.
/// Throws BadLevel for s outside [2, n].
StarVerdict check_star(const PointSet& X, int s, WitnessScan scan = WitnessScan::first);

/// Single-threaded reference implementation of check_star.
StarVerdict check_star_serial(const PointSet& X, int s, WitnessScan scan = WitnessScan::first);

/// ACM verdict: (star_n) for n >= 2; every configuration in P^1 is ACM, and
/// so is the empty configuration.
bool is_acm(const PointSet& X);

/// A chain P = u_0, ..., u_r = Q of points of X inside the box of P, Q with
/// consecutive Hamming distance 1, where r = d(P, Q). Requires (star_s) on X,
/// P, Q in X and r <= s. Throws PathPreconditionFailed when a precondition
/// fails and InternalInvariantViolation if no such chain exists.
std::vector<GridPoint> find_path(const PointSet& X, const GridPoint& p, const GridPoint& q, int s);

/// Points a, b of X with a_dir != b_dir, d(a, b) = 1 and all coordinates
/// drawn from {v_k, w_k}. Requires v_dir != w_dir and the find_path
/// preconditions on (v, w).
std::pair<GridPoint, GridPoint> find_step_pair(const PointSet& X, const GridPoint& v,
                                               const GridPoint& w, int s, int direction = 1);

}  // namespace acmpts
