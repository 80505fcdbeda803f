#include "acmpts/grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "acmpts/error.hpp"

namespace acmpts {

std::string to_string(const GridPoint& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p.coords[k]);
  }
  return out + ")";
}

int coordinate(const GridPoint& p, int i) {
  if (i < 1 || i > p.dimension()) {
    throw Error(ErrorCode::BadDirection, "direction " + std::to_string(i) +
                                             " outside 1.." + std::to_string(p.dimension()));
  }
  return p.coords[i - 1];
}

GridShape::GridShape(std::vector<int> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
  size_ = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    strides_[k] = size_;
    size_ *= static_cast<std::size_t>(dims_[k]);
  }
}

std::size_t GridShape::index(const GridPoint& p) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    idx += static_cast<std::size_t>(p.coords[k] - 1) * strides_[k];
  }
  return idx;
}

GridPoint GridShape::point(std::size_t index) const {
  GridPoint p;
  p.coords.resize(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    p.coords[k] = static_cast<int>(index / strides_[k]) + 1;
    index %= strides_[k];
  }
  return p;
}

PointSet PointSet::empty(int n) { return PointSet(n, std::vector<int>(n, 0), {}); }

bool PointSet::contains(const GridPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t PointSet::grid_size() const {
  std::size_t size = 1;
  for (int r : dims_) size *= static_cast<std::size_t>(r);
  return size;
}

PointSet canonical_subset(int n, std::span<const GridPoint> points) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least 1");
  for (const auto& p : points) {
    if (p.dimension() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + to_string(p) + " does not have " + std::to_string(n) + " coordinates");
    }
  }
  if (points.empty()) return PointSet::empty(n);

  std::vector<std::map<int, int>> relabel(n);
  for (const auto& p : points) {
    for (int k = 0; k < n; ++k) relabel[k].emplace(p.coords[k], 0);
  }
  std::vector<int> dims(n);
  for (int k = 0; k < n; ++k) {
    int next = 1;
    for (auto& [value, label] : relabel[k]) label = next++;
    dims[k] = next - 1;
  }

  std::vector<GridPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    GridPoint q;
    q.coords.resize(n);
    for (int k = 0; k < n; ++k) q.coords[k] = relabel[k].at(p.coords[k]);
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return PointSet(n, std::move(dims), std::move(out));
}

PointSet canonicalize(std::span<const GridPoint> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyConfiguration, "no points given");
  const int n = raw.front().dimension();
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "points must have at least one coordinate");
  return canonical_subset(n, raw);
}

PointSet canonicalize(std::span<const std::vector<int>> raw) {
  std::vector<GridPoint> pts;
  pts.reserve(raw.size());
  for (const auto& t : raw) pts.emplace_back(t);
  return canonicalize(std::span<const GridPoint>(pts));
}

GridPoint drop_coordinate(const GridPoint& p, int i) {
  GridPoint q;
  q.coords.reserve(p.coords.size() - 1);
  for (int k = 0; k < p.dimension(); ++k) {
    if (k != i - 1) q.coords.push_back(p.coords[k]);
  }
  return q;
}

PointSet project(const PointSet& X, int i) {
  if (i < 1 || i > X.n()) {
    throw Error(ErrorCode::BadDirection, "direction " + std::to_string(i) + " outside 1.." +
                                             std::to_string(X.n()));
  }
  if (X.n() < 2) throw Error(ErrorCode::BadDirection, "cannot project a configuration in P^1");
  std::vector<GridPoint> image;
  image.reserve(X.size());
  for (const auto& p : X.points()) image.push_back(drop_coordinate(p, i));
  return canonical_subset(X.n() - 1, image);
}

namespace {

bool is_permutation_of_1_to(std::span<const int> perm, int m) {
  if (static_cast<int>(perm.size()) != m) return false;
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < m; ++k) {
    if (sorted[k] != k + 1) return false;
  }
  return true;
}

}  // namespace

PointSet relabel(const PointSet& X, std::span<const int> direction_perm,
                 std::span<const std::vector<int>> level_perms) {
  const int n = X.n();
  if (!is_permutation_of_1_to(direction_perm, n)) {
    throw Error(ErrorCode::BadPermutation, "direction permutation is not a permutation of 1..n");
  }
  if (!level_perms.empty()) {
    if (static_cast<int>(level_perms.size()) != n) {
      throw Error(ErrorCode::BadPermutation, "need one level permutation per direction");
    }
    for (int k = 0; k < n; ++k) {
      if (!is_permutation_of_1_to(level_perms[k], X.dims()[k])) {
        throw Error(ErrorCode::BadPermutation,
                    "level permutation for direction " + std::to_string(k + 1) + " is malformed");
      }
    }
  }
  std::vector<GridPoint> moved;
  moved.reserve(X.size());
  for (const auto& p : X.points()) {
    GridPoint q;
    q.coords.resize(n);
    for (int k = 0; k < n; ++k) {
      const int level = level_perms.empty() ? p.coords[k] : level_perms[k][p.coords[k] - 1];
      q.coords[direction_perm[k] - 1] = level;
    }
    moved.push_back(std::move(q));
  }
  return canonical_subset(n, moved);
}

}  // namespace acmpts
