#include "acmpts/levels.hpp"

#include <algorithm>
#include <set>

#include "acmpts/error.hpp"
#include "acmpts/star.hpp"

namespace acmpts {
namespace {

void check_direction(const PointSet& X, int i) {
  if (i < 1 || i > X.n()) {
    throw Error(ErrorCode::BadDirection,
                "direction " + std::to_string(i) + " outside 1.." + std::to_string(X.n()));
  }
}

void check_level(const PointSet& X, int i, int j) {
  check_direction(X, i);
  if (j < 1 || j > X.dims()[i - 1]) {
    throw Error(ErrorCode::BadLevel, "level " + std::to_string(j) + " outside 1.." +
                                         std::to_string(X.dims()[i - 1]) + " in direction " +
                                         std::to_string(i));
  }
}

std::set<GridPoint> shadow(std::span<const GridPoint> points, int i) {
  std::set<GridPoint> out;
  for (const auto& p : points) out.insert(drop_coordinate(p, i));
  return out;
}

}  // namespace

LevelDecomposition level_sets(const PointSet& X, int i) {
  check_direction(X, i);
  LevelDecomposition dec;
  dec.direction = i;
  const int r = X.is_empty() ? 0 : X.dims()[i - 1];
  dec.levels.resize(r);
  for (int j = 0; j < r; ++j) dec.levels[j].index = j + 1;
  for (const auto& p : X.points()) dec.levels[p.coords[i - 1] - 1].points.push_back(p);
  return dec;
}

PointSet level_subset(const PointSet& X, int i, int j) {
  const int levels[] = {j};
  return union_of_levels(X, i, levels);
}

PointSet union_of_levels(const PointSet& X, int i, std::span<const int> levels) {
  for (int j : levels) check_level(X, i, j);
  std::vector<GridPoint> kept;
  for (const auto& p : X.points()) {
    if (std::find(levels.begin(), levels.end(), p.coords[i - 1]) != levels.end()) kept.push_back(p);
  }
  return canonical_subset(X.n(), kept);
}

bool inclusion_property(const PointSet& X, int i) {
  check_direction(X, i);
  if (X.n() < 2) throw Error(ErrorCode::BadDirection, "inclusion property needs n >= 2");

  // Chains under inclusion are cardinality-monotone: sort by size and check
  // consecutive containment (equal sizes then force equality).
  std::vector<std::set<GridPoint>> shadows;
  for (const auto& level : level_sets(X, i).levels) shadows.push_back(shadow(level.points, i));
  std::sort(shadows.begin(), shadows.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (std::size_t k = 1; k < shadows.size(); ++k) {
    if (!std::includes(shadows[k].begin(), shadows[k].end(), shadows[k - 1].begin(),
                       shadows[k - 1].end())) {
      return false;
    }
  }
  if (X.n() == 2) return true;  // finite subsets of P^1 are ACM
  for (const auto& sh : shadows) {
    const std::vector<GridPoint> pts(sh.begin(), sh.end());
    if (!is_acm(canonical_subset(X.n() - 1, pts))) return false;
  }
  return true;
}

PointSet remove_level(const PointSet& X, int i, int j) {
  check_level(X, i, j);
  if (X.dims()[i - 1] < 2) {
    throw Error(ErrorCode::WouldBeEmpty,
                "direction " + std::to_string(i) + " has a single level");
  }
  std::vector<GridPoint> kept;
  for (const auto& p : X.points()) {
    if (p.coords[i - 1] != j) kept.push_back(p);
  }
  return canonical_subset(X.n(), kept);
}

PointSet interface_set(const PointSet& X, int i, int j) {
  check_level(X, i, j);
  std::vector<GridPoint> level;
  for (const auto& p : X.points()) {
    if (p.coords[i - 1] == j) level.push_back(p);
  }
  const auto over = shadow(level, i);
  std::vector<GridPoint> out;
  for (const auto& p : X.points()) {
    if (p.coords[i - 1] != j && over.contains(drop_coordinate(p, i))) out.push_back(p);
  }
  return canonical_subset(X.n(), out);
}

int max_level_size(const PointSet& X) {
  std::size_t best = 0;
  for (int i = 1; i <= X.n(); ++i) {
    for (const auto& level : level_sets(X, i).levels) best = std::max(best, level.points.size());
  }
  return static_cast<int>(best);
}

}  // namespace acmpts
