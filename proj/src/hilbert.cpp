#include "acmpts/hilbert.hpp"

#include <algorithm>
#include <set>

#include "acmpts/error.hpp"
#include "acmpts/exact_rank.hpp"

namespace acmpts {
namespace {

void check_box(const MultiDegree& box) {
  for (int t : box) {
    if (t < 0) throw Error(ErrorCode::BadDegree, "negative degree in box");
  }
}

std::vector<GridPoint> distinct(std::span<const GridPoint> points, std::size_t n) {
  std::set<GridPoint> seen;
  for (const auto& p : points) {
    if (p.coords.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + to_string(p) + " does not match degree length " + std::to_string(n));
    }
    seen.insert(p);
  }
  return {seen.begin(), seen.end()};
}

// h(t) only depends on min(t_i, m_i - 1) where m_i is the number of distinct
// nodes used in direction i: higher powers are combinations of lower ones
// on m_i nodes.
MultiDegree clamp_degree(std::span<const GridPoint> points, const MultiDegree& t) {
  MultiDegree out(t);
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::set<int> nodes;
    for (const auto& p : points) nodes.insert(p.coords[k]);
    out[k] = std::min(out[k], static_cast<int>(nodes.size()) - 1);
  }
  return out;
}

std::int64_t evaluation_rank(std::span<const GridPoint> points, const MultiDegree& t) {
  const std::size_t n = t.size();
  std::size_t cols = 1;
  for (int d : t) cols *= static_cast<std::size_t>(d + 1);
  const std::size_t rows = points.size();

  // Enumerate exponent vectors in mixed radix order.
  std::vector<MultiDegree> exponents;
  exponents.reserve(cols);
  MultiDegree a(n, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    exponents.push_back(a);
    for (std::size_t k = n; k-- > 0;) {
      if (++a[k] <= t[k]) break;
      a[k] = 0;
    }
  }

  IntMatrix m(rows, cols);
  bool overflow = false;
  for (std::size_t r = 0; r < rows && !overflow; ++r) {
    for (std::size_t c = 0; c < cols && !overflow; ++c) {
      std::int64_t v = 1;
      for (std::size_t k = 0; k < n && !overflow; ++k) {
        for (int e = 0; e < exponents[c][k]; ++e) {
          if (__builtin_mul_overflow(v, static_cast<std::int64_t>(points[r].coords[k]), &v)) {
            overflow = true;
            break;
          }
        }
      }
      m(r, c) = v;
    }
  }
  if (!overflow) return static_cast<std::int64_t>(exact_rank(m));

  std::vector<mpz_class> big(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class v = 1;
      for (std::size_t k = 0; k < n; ++k) {
        mpz_class node = points[r].coords[k];
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), node.get_mpz_t(), static_cast<unsigned long>(exponents[c][k]));
        v *= power;
      }
      big[r * cols + c] = v;
    }
  }
  return static_cast<std::int64_t>(exact_rank(std::move(big), rows, cols));
}

template <bool Parallel>
HilbertTable build_table(std::span<const GridPoint> input, const MultiDegree& box) {
  check_box(box);
  const auto points = distinct(input, box.size());
  HilbertTable table(box);
  const auto cells = static_cast<std::ptrdiff_t>(table.size());
  if (points.empty()) return table;
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    const auto flat = static_cast<std::size_t>(c);
    table[flat] = evaluation_rank(points, clamp_degree(points, table.degree_at(flat)));
  }
  return table;
}

}  // namespace

GradedTable::GradedTable(MultiDegree box) : box_(std::move(box)) {
  check_box(box_);
  std::size_t size = 1;
  for (int t : box_) size *= static_cast<std::size_t>(t + 1);
  values_.assign(size, 0);
}

std::size_t GradedTable::flat_index(const MultiDegree& t) const {
  if (t.size() != box_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "degree length does not match table");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < 0 || t[k] > box_[k]) throw Error(ErrorCode::BadDegree, "degree outside table box");
    flat = flat * static_cast<std::size_t>(box_[k] + 1) + static_cast<std::size_t>(t[k]);
  }
  return flat;
}

MultiDegree GradedTable::degree_at(std::size_t flat) const {
  MultiDegree t(box_.size());
  for (std::size_t k = box_.size(); k-- > 0;) {
    const auto radix = static_cast<std::size_t>(box_[k] + 1);
    t[k] = static_cast<int>(flat % radix);
    flat /= radix;
  }
  return t;
}

std::int64_t GradedTable::at(const MultiDegree& t) const { return values_[flat_index(t)]; }

std::int64_t GradedTable::value_or_zero(const MultiDegree& t) const {
  for (int d : t) {
    if (d < 0) return 0;
  }
  return at(t);
}

std::int64_t hilbert_value(std::span<const GridPoint> input, const MultiDegree& t) {
  check_box(t);
  const auto points = distinct(input, t.size());
  if (points.empty()) return 0;
  return evaluation_rank(points, clamp_degree(points, t));
}

std::int64_t hilbert_value(const PointSet& X, const MultiDegree& t) {
  return hilbert_value(std::span<const GridPoint>(X.points()), t);
}

HilbertTable hilbert_table(std::span<const GridPoint> points, const MultiDegree& box) {
  return build_table<true>(points, box);
}

HilbertTable hilbert_table(const PointSet& X, const MultiDegree& box) {
  return build_table<true>(X.points(), box);
}

HilbertTable hilbert_table_serial(std::span<const GridPoint> points, const MultiDegree& box) {
  return build_table<false>(points, box);
}

DeltaTable delta_of(const HilbertTable& h) {
  const MultiDegree& box = h.box();
  const std::size_t n = box.size();
  DeltaTable delta(box);
  for (std::size_t flat = 0; flat < delta.size(); ++flat) {
    const MultiDegree t = delta.degree_at(flat);
    std::int64_t sum = 0;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
      MultiDegree shifted = t;
      int sign = 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (subset & (std::uint64_t{1} << k)) {
          --shifted[k];
          sign = -sign;
        }
      }
      sum += sign * h.value_or_zero(shifted);
    }
    delta[flat] = sum;
  }
  return delta;
}

DeltaTable delta_table(const PointSet& X, const MultiDegree& box) {
  return delta_of(hilbert_table(X, box));
}

}  // namespace acmpts
