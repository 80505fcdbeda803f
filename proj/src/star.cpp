#include "acmpts/star.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>

#include "acmpts/error.hpp"

namespace acmpts {
namespace {

// Below this many grid cells the pair scan stays on the calling thread.
constexpr std::size_t kParallelGridThreshold = 64;
constexpr std::size_t kMaxGridCells = std::size_t{1} << 26;

void require_same_dimension(const GridPoint& u, const GridPoint& v) {
  if (u.dimension() != v.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, to_string(u) + " vs " + to_string(v));
  }
}

// Dense membership table for X over its grid.
struct Occupancy {
  GridShape shape;
  std::vector<char> present;

  explicit Occupancy(const PointSet& X) : shape(X.dims()) {
    if (shape.size() > kMaxGridCells) {
      throw Error(ErrorCode::TooLarge, "grid has " + std::to_string(shape.size()) + " cells");
    }
    present.assign(shape.size(), 0);
    for (const auto& p : X.points()) present[shape.index(p)] = 1;
  }
};

// Witness test for the pair (a, b) of grid indices, a < b. Returns the kind
// when the pair violates (star_s), with d(P, Q) written to `distance`.
std::optional<WitnessKind> classify_pair(const Occupancy& occ, const GridPoint& p,
                                         const GridPoint& q, std::size_t ia, std::size_t ib,
                                         int s, int& distance) {
  const int n = p.dimension();
  std::ptrdiff_t diff_steps[64];
  int d = 0;
  for (int k = 0; k < n; ++k) {
    if (p.coords[k] != q.coords[k]) {
      if (d >= s) return std::nullopt;
      diff_steps[d] = static_cast<std::ptrdiff_t>(q.coords[k] - p.coords[k]) *
                      static_cast<std::ptrdiff_t>(occ.shape.stride(k));
      ++d;
    }
  }
  if (d < 2) return std::nullopt;

  const bool p_in = occ.present[ia] != 0;
  const bool q_in = occ.present[ib] != 0;
  if (p_in != q_in) return std::nullopt;

  // Corners other than P (mask 0) and Q (full mask).
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(ia);
    for (int k = 0; k < d; ++k) {
      if (mask & (std::uint32_t{1} << k)) idx += diff_steps[k];
    }
    const bool in = occ.present[static_cast<std::size_t>(idx)] != 0;
    if (p_in && in) return std::nullopt;    // type (i) needs every other corner absent
    if (!p_in && !in) return std::nullopt;  // type (ii) needs every other corner present
  }
  distance = d;
  return p_in ? WitnessKind::type_i : WitnessKind::type_ii;
}

Witness make_witness(WitnessKind kind, GridPoint p, GridPoint q, int d) {
  Witness w{kind, std::move(p), std::move(q), d, {}};
  w.box = combinatorial_box(w.p, w.q);
  return w;
}

// All witnesses (P, Q) with P the grid point of index a; stops after the
// first one unless exhaustive.
std::vector<Witness> scan_from(const Occupancy& occ, std::size_t a, int s, WitnessScan scan) {
  std::vector<Witness> found;
  const GridPoint p = occ.shape.point(a);
  for (std::size_t b = a + 1; b < occ.shape.size(); ++b) {
    const GridPoint q = occ.shape.point(b);
    int d = 0;
    if (auto kind = classify_pair(occ, p, q, a, b, s, d)) {
      found.push_back(make_witness(*kind, p, q, d));
      if (scan == WitnessScan::first) break;
    }
  }
  return found;
}

void check_star_args(const PointSet& X, int s) {
  if (s < 2 || s > X.n()) {
    throw Error(ErrorCode::BadLevel,
                "star level " + std::to_string(s) + " outside 2.." + std::to_string(X.n()));
  }
  if (X.n() > 64) throw Error(ErrorCode::TooLarge, "at most 64 directions supported");
}

}  // namespace

int hamming_distance(const GridPoint& u, const GridPoint& v) {
  require_same_dimension(u, v);
  int d = 0;
  for (int k = 0; k < u.dimension(); ++k) d += u.coords[k] != v.coords[k];
  return d;
}

std::vector<GridPoint> combinatorial_box(const GridPoint& p, const GridPoint& q) {
  require_same_dimension(p, q);
  std::vector<GridPoint> box{p};
  for (int k = 0; k < p.dimension(); ++k) {
    if (p.coords[k] == q.coords[k]) continue;
    const std::size_t half = box.size();
    for (std::size_t m = 0; m < half; ++m) {
      GridPoint flipped = box[m];
      flipped.coords[k] = q.coords[k];
      box.push_back(std::move(flipped));
    }
  }
  std::sort(box.begin(), box.end());
  return box;
}

StarVerdict check_star_serial(const PointSet& X, int s, WitnessScan scan) {
  check_star_args(X, s);
  StarVerdict verdict;
  if (X.is_empty()) return verdict;
  const Occupancy occ(X);
  for (std::size_t a = 0; a < occ.shape.size(); ++a) {
    auto found = scan_from(occ, a, s, scan);
    if (found.empty()) continue;
    verdict.satisfied = false;
    for (auto& w : found) verdict.witnesses.push_back(std::move(w));
    if (scan == WitnessScan::first) break;
  }
  return verdict;
}

StarVerdict check_star(const PointSet& X, int s, WitnessScan scan) {
  check_star_args(X, s);
  StarVerdict verdict;
  if (X.is_empty()) return verdict;
  const Occupancy occ(X);
  const std::size_t cells = occ.shape.size();
  const auto total = static_cast<std::ptrdiff_t>(cells);
  std::vector<std::vector<Witness>> per_start(cells);
  // Least start index with a witness so far; later starts can be skipped in
  // first-witness mode.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

#pragma omp parallel for schedule(dynamic, 4) if (cells >= kParallelGridThreshold)
  for (std::ptrdiff_t a = 0; a < total; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    if (scan == WitnessScan::first && ua > best.load(std::memory_order_relaxed)) continue;
    per_start[ua] = scan_from(occ, ua, s, scan);
    if (!per_start[ua].empty() && scan == WitnessScan::first) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (ua < cur && !best.compare_exchange_weak(cur, ua)) {
      }
    }
  }

  for (auto& found : per_start) {
    if (found.empty()) continue;
    verdict.satisfied = false;
    for (auto& w : found) verdict.witnesses.push_back(std::move(w));
    if (scan == WitnessScan::first) break;
  }
  return verdict;
}

bool is_acm(const PointSet& X) {
  if (X.n() <= 1 || X.size() <= 1) return true;
  return check_star(X, X.n()).satisfied;
}

std::vector<GridPoint> find_path(const PointSet& X, const GridPoint& p, const GridPoint& q, int s) {
  if (p.dimension() != X.n() || q.dimension() != X.n()) {
    throw Error(ErrorCode::PathPreconditionFailed, "endpoints do not match the configuration dimension");
  }
  if (!X.contains(p) || !X.contains(q)) {
    throw Error(ErrorCode::PathPreconditionFailed, "endpoints must be points of X");
  }
  const int r = hamming_distance(p, q);
  if (r <= 1) return r == 0 ? std::vector<GridPoint>{p} : std::vector<GridPoint>{p, q};
  if (s < 2 || s > X.n() || r > s) {
    throw Error(ErrorCode::PathPreconditionFailed,
                "need 2 <= d(P,Q) = " + std::to_string(r) + " <= s = " + std::to_string(s) +
                    " <= n");
  }
  if (!check_star(X, s).satisfied) {
    throw Error(ErrorCode::PathPreconditionFailed,
                "configuration does not have the star_" + std::to_string(s) + " property");
  }

  // Breadth-first search over box corners lying in X; neighbours are visited
  // in lexicographic order so the chain is deterministic.
  const auto box = combinatorial_box(p, q);
  std::map<GridPoint, GridPoint> parent;
  parent.emplace(p, p);
  std::deque<GridPoint> frontier{p};
  while (!frontier.empty() && !parent.contains(q)) {
    const GridPoint cur = frontier.front();
    frontier.pop_front();
    for (const auto& next : box) {
      if (hamming_distance(cur, next) != 1 || parent.contains(next) || !X.contains(next)) continue;
      parent.emplace(next, cur);
      frontier.push_back(next);
    }
  }
  if (!parent.contains(q)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "no chain inside the box joins " + to_string(p) + " and " + to_string(q));
  }
  std::vector<GridPoint> path{q};
  while (path.back() != p) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  if (static_cast<int>(path.size()) != r + 1) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "shortest chain from " + to_string(p) + " to " + to_string(q) + " has " +
                    std::to_string(path.size() - 1) + " steps, expected " + std::to_string(r));
  }
  return path;
}

std::pair<GridPoint, GridPoint> find_step_pair(const PointSet& X, const GridPoint& v,
                                               const GridPoint& w, int s, int direction) {
  if (direction < 1 || direction > X.n() || v.dimension() != X.n() || w.dimension() != X.n()) {
    throw Error(ErrorCode::PathPreconditionFailed, "bad direction or point dimension");
  }
  if (v.coords[direction - 1] == w.coords[direction - 1]) {
    throw Error(ErrorCode::PathPreconditionFailed,
                "points agree in direction " + std::to_string(direction));
  }
  const auto path = find_path(X, v, w, s);
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k - 1].coords[direction - 1] != path[k].coords[direction - 1]) {
      return {path[k - 1], path[k]};
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation, "chain never changes the requested direction");
}

}  // namespace acmpts
