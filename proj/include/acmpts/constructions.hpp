#pragma once

// Point-set constructions that preserve or control the ACM property:
// liaison addition of n summands cut by forms F_i = prod_{j in S_i} A_{i,j},
// and adjoining a full layer over the shadow of X at a new hyperplane.
//
// Summands and results are kept in the coordinates of a common grid so the
// Hilbert-function identities can be checked without relabeling.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "acmpts/grid.hpp"

namespace acmpts {

/// F_i = product of A_{i,j} over j in support; degree D_i = |support|.
struct DirectionForm {
  int direction = 0;
  std::set<int> support;

  int degree() const noexcept { return static_cast<int>(support.size()); }
};

struct LiaisonInput {
  std::vector<std::vector<GridPoint>> summands;  // V_1..V_n
  std::vector<DirectionForm> forms;              // forms[i-1] has direction i
};

struct LiaisonResult {
  std::vector<GridPoint> points;    // Z in common-grid coordinates, sorted
  std::vector<std::string> labels;  // "V1".."Vn" or "box", parallel to points
  PointSet configuration;           // canonical form of Z
};

/// The complete intersection V of F_1..F_n: all u with u_i in S_i.
std::vector<GridPoint> form_box(std::span<const DirectionForm> forms);

/// Z = V_1 ∪ ... ∪ V_n ∪ V after validating the hypotheses. Throws
/// VanishingConditionViolated (some F_i misses a point of V_j, j != i),
/// ReducednessGuardViolated (F_i vanishes on a point of V_i),
/// OverlappingSummands, or DimensionMismatch for malformed input.
LiaisonResult liaison_addition(const LiaisonInput& input);

/// (sum_i D_i) in every coordinate.
MultiDegree default_additivity_box(const LiaisonInput& input);

/// h_Z(t) = h_V(t) + sum_i h_{V_i}(t - D_i e_i) for every 0 <= t <= box,
/// with h = 0 in negative degrees.
bool verify_hf_additivity(const LiaisonInput& input, std::span<const GridPoint> z,
                          const MultiDegree& box);

enum class LayerSide { after, before };

/// Points of the new layer: the shadow pi_i(X) placed on a hyperplane of
/// direction i that contains no point of X (level r_i + 1 for `after`, level
/// 0 for `before`), in the coordinates of X.
std::vector<GridPoint> layer_points(const PointSet& X, int i, LayerSide side);

/// Z = X ∪ layer, canonicalized. Throws BadDirection; needs n >= 2.
PointSet add_layer(const PointSet& X, int i, LayerSide side = LayerSide::after);

/// h_Z(t) = h_layer(t) + h_X(t - e_i) for every 0 <= t <= box.
bool verify_layer_hf(const PointSet& X, int i, const MultiDegree& box,
                     LayerSide side = LayerSide::after);

}  // namespace acmpts
