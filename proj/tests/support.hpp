#pragma once

// Test-side oracles. They share nothing with the library beyond the data
// types: ranks use plain rational Gaussian elimination, Hilbert functions
// build the full evaluation matrix without degree clamping, and the star
// test walks explicit coordinate tuples with std::set membership.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <vector>

#include "acmpts/grid.hpp"

namespace testing {

using acmpts::GridPoint;
using acmpts::MultiDegree;
using acmpts::PointSet;

inline PointSet make(std::initializer_list<GridPoint> pts) {
  std::vector<GridPoint> v(pts);
  return acmpts::canonicalize(std::span<const GridPoint>(v));
}

inline PointSet make(const std::vector<GridPoint>& pts) {
  return acmpts::canonicalize(std::span<const GridPoint>(pts));
}

// Hand-checked configurations used across suites.
inline PointSet liaison_eleven() {
  return make({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {2, 1, 1}, {2, 1, 2}, {2, 3, 1}, {2, 3, 2},
               {3, 1, 1}, {3, 1, 2}, {3, 3, 1}, {3, 3, 2}});
}

inline PointSet liaison_eleven_moved() {
  return make({{1, 1, 1}, {3, 2, 2}, {3, 3, 3}, {2, 1, 1}, {2, 1, 2}, {2, 3, 1}, {2, 3, 2},
               {3, 1, 1}, {3, 1, 2}, {3, 3, 1}, {3, 3, 2}});
}

inline PointSet cube_minus_diagonal() {
  return make({{1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}});
}

inline PointSet chain_twelve() {
  return make({{1, 1, 3}, {2, 1, 3}, {3, 1, 2}, {3, 3, 2}, {3, 1, 3}, {3, 3, 3}, {4, 3, 1},
               {4, 1, 2}, {4, 3, 2}, {4, 2, 2}, {4, 1, 3}, {4, 3, 3}});
}

// Every tuple in {1..dims[0]} x ... in lexicographic order.
inline std::vector<GridPoint> all_tuples(const std::vector<int>& dims) {
  std::vector<GridPoint> out;
  GridPoint cur(std::vector<int>(dims.size(), 1));
  while (true) {
    out.push_back(cur);
    std::size_t k = dims.size();
    while (k > 0) {
      --k;
      if (cur.coords[k] < dims[k]) {
        ++cur.coords[k];
        break;
      }
      cur.coords[k] = 1;
      if (k == 0) return out;
    }
  }
}

// Nonempty subsets of the grid as raw point lists, by bitmask over
// all_tuples order.
inline std::vector<std::vector<GridPoint>> all_subsets(const std::vector<int>& dims) {
  const auto cells = all_tuples(dims);
  std::vector<std::vector<GridPoint>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    std::vector<GridPoint> pts;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) pts.push_back(cells[k]);
    }
    out.push_back(std::move(pts));
  }
  return out;
}

inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Rank of the full evaluation matrix, columns = all exponent vectors a <= t.
inline std::int64_t hilbert_brute(const std::vector<GridPoint>& raw, const MultiDegree& t) {
  for (int d : t) {
    if (d < 0) return 0;
  }
  const std::set<GridPoint> pts(raw.begin(), raw.end());
  std::vector<int> bounds;
  for (int d : t) bounds.push_back(d + 1);
  const auto exps = all_tuples(bounds);  // entries are a_i + 1
  std::vector<std::vector<mpq_class>> m;
  for (const auto& p : pts) {
    std::vector<mpq_class> row;
    for (const auto& e : exps) {
      mpz_class v = 1;
      for (std::size_t k = 0; k < t.size(); ++k) {
        for (int a = 1; a < e.coords[k]; ++a) v *= p.coords[k];
      }
      row.emplace_back(v);
    }
    m.push_back(std::move(row));
  }
  return static_cast<std::int64_t>(rank_q(std::move(m)));
}

inline int distance(const GridPoint& a, const GridPoint& b) {
  int d = 0;
  for (std::size_t k = 0; k < a.coords.size(); ++k) d += a.coords[k] != b.coords[k];
  return d;
}

inline std::vector<GridPoint> box_brute(const GridPoint& p, const GridPoint& q) {
  std::vector<GridPoint> out;
  for (const auto& u : all_tuples(std::vector<int>(p.coords.size(), 2))) {
    GridPoint c;
    for (std::size_t k = 0; k < p.coords.size(); ++k) {
      c.coords.push_back(u.coords[k] == 1 ? p.coords[k] : q.coords[k]);
    }
    out.push_back(c);
  }
  std::set<GridPoint> dedup(out.begin(), out.end());
  return {dedup.begin(), dedup.end()};
}

// Literal reading of the witness definition over unordered pairs of grid
// tuples.
inline bool star_brute(const PointSet& X, int s) {
  const std::set<GridPoint> in(X.points().begin(), X.points().end());
  const auto grid = all_tuples(X.dims());
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = a + 1; b < grid.size(); ++b) {
      const int d = distance(grid[a], grid[b]);
      if (d < 2 || d > s) continue;
      const bool pin = in.contains(grid[a]);
      const bool qin = in.contains(grid[b]);
      if (pin != qin) continue;
      std::size_t inside = 0;
      for (const auto& c : box_brute(grid[a], grid[b])) inside += in.contains(c);
      const std::size_t corners = std::size_t{1} << d;
      if (pin && inside == 2) return false;
      if (!pin && inside == corners - 2) return false;
    }
  }
  return true;
}

}  // namespace testing
