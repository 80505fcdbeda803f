#include "acmpts/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "acmpts/error.hpp"
#include "acmpts/levels.hpp"
#include "acmpts/reisner.hpp"
#include "acmpts/star.hpp"

namespace acmpts {
namespace {

std::size_t cell_count(const std::vector<int>& dims) {
  if (dims.size() < 2) throw Error(ErrorCode::DimensionMismatch, "enumeration needs n >= 2");
  std::size_t cells = 1;
  for (int r : dims) {
    if (r < 1) throw Error(ErrorCode::BadLevel, "grid sizes must be positive");
    cells *= static_cast<std::size_t>(r);
    if (cells > kMaxRandomCells) break;
  }
  return cells;
}

bool closure_holds(const PointSet& X) {
  for (int i = 1; i <= X.n(); ++i) {
    const int r = X.dims()[i - 1];
    for (int j = 1; j <= r; ++j) {
      if (!is_acm(level_subset(X, i, j))) return false;
      if (r >= 2 && !is_acm(remove_level(X, i, j))) return false;
      const PointSet shared = interface_set(X, i, j);
      if (!shared.is_empty() && !is_acm(shared)) return false;
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
      std::vector<int> levels;
      for (int j = 1; j <= r; ++j) {
        if (mask & (std::uint32_t{1} << (j - 1))) levels.push_back(j);
      }
      if (!is_acm(union_of_levels(X, i, levels))) return false;
    }
  }
  return true;
}

bool paths_hold(const PointSet& X) {
  const auto& pts = X.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (hamming_distance(pts[a], pts[b]) < 2) continue;
      try {
        if (!satisfies_path_contract(X, pts[a], pts[b], find_path(X, pts[a], pts[b], X.n()))) {
          return false;
        }
      } catch (const Error&) {
        return false;
      }
    }
  }
  return true;
}

void tally(EnumerationSummary& s, const EnumerationRecord& rec) {
  ++s.records;
  s.acm += rec.star;
  s.agreements += rec.agree;
  s.closure_failures += !rec.closure_ok;
  s.path_failures += !rec.paths_ok;
  s.euler_failures += !rec.euler_ok;
}

constexpr std::uint64_t kBlock = std::uint64_t{1} << 14;

// Number of subsets to evaluate; ids are 1..count in exhaustive mode and
// positions in `sampled` otherwise.
std::uint64_t plan(const EnumerationOptions& options, std::vector<std::uint64_t>& sampled) {
  if (options.samples) {
    sampled = random_ids(options);
    return sampled.size();
  }
  const std::size_t cells = cell_count(options.dims);
  if (cells > kMaxExhaustiveCells) {
    throw Error(ErrorCode::TooLarge, "exhaustive enumeration allows at most " +
                                         std::to_string(kMaxExhaustiveCells) + " grid cells");
  }
  return (std::uint64_t{1} << cells) - 1;
}

}  // namespace

std::vector<std::uint64_t> random_ids(const EnumerationOptions& options) {
  const std::size_t cells = cell_count(options.dims);
  if (cells > kMaxRandomCells) {
    throw Error(ErrorCode::TooLarge, "random enumeration allows at most " +
                                         std::to_string(kMaxRandomCells) + " grid cells");
  }
  const std::size_t samples = options.samples.value_or(0);
  const std::uint64_t full = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  if (samples > full) {
    throw Error(ErrorCode::TooLarge, "more samples requested than nonempty subsets exist");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size_of(1, cells);
  std::vector<std::size_t> order(cells);
  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> ids;
  while (ids.size() < samples) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::uint64_t id = 0;
    for (std::size_t k = 0, size = size_of(rng); k < size; ++k) id |= std::uint64_t{1} << order[k];
    if (seen.insert(id).second) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<GridPoint> subset_points(const std::vector<int>& dims, std::uint64_t id) {
  const GridShape shape(dims);
  std::vector<GridPoint> pts;
  for (std::size_t k = 0; k < shape.size() && k < 64; ++k) {
    if (id & (std::uint64_t{1} << k)) pts.push_back(shape.point(k));
  }
  return pts;
}

EnumerationRecord evaluate_subset(const std::vector<int>& dims, std::uint64_t id) {
  const int n = static_cast<int>(dims.size());
  const PointSet X = canonical_subset(n, subset_points(dims, id));
  EnumerationRecord rec;
  rec.id = id;
  rec.size = X.size();
  rec.star = is_acm(X);
  try {
    rec.reisner = is_cm(X);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalInvariantViolation) throw;
    rec.euler_ok = false;
  }
  bool any_inclusion = false;
  for (int i = 1; i <= n; ++i) {
    rec.inclusion.push_back(inclusion_property(X, i));
    any_inclusion = any_inclusion || rec.inclusion.back();
  }
  rec.agree = rec.star == rec.reisner && (!any_inclusion || rec.star) &&
              (n != 2 || any_inclusion == rec.star);
  if (rec.star) {
    rec.closure_ok = closure_holds(X);
    rec.paths_ok = paths_hold(X);
  }
  return rec;
}

EnumerationSummary enumerate_stream(const EnumerationOptions& options, const RecordSink& sink) {
  std::vector<std::uint64_t> sampled;
  const std::uint64_t count = plan(options, sampled);
  auto id_at = [&](std::uint64_t k) { return sampled.empty() ? k + 1 : sampled[k]; };

  EnumerationSummary summary;
  std::vector<EnumerationRecord> block;
  for (std::uint64_t first = 0; first < count; first += kBlock) {
    const auto size = static_cast<std::ptrdiff_t>(std::min(kBlock, count - first));
    block.assign(static_cast<std::size_t>(size), EnumerationRecord{});
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < size; ++k) {
      block[k] = evaluate_subset(options.dims, id_at(first + static_cast<std::uint64_t>(k)));
    }
    for (const auto& rec : block) {
      tally(summary, rec);
      sink(rec);
    }
  }
  return summary;
}

EnumerationReport enumerate(const EnumerationOptions& options) {
  EnumerationReport report;
  report.dims = options.dims;
  report.summary = enumerate_stream(
      options, [&](const EnumerationRecord& rec) { report.records.push_back(rec); });
  return report;
}

EnumerationReport enumerate_serial(const EnumerationOptions& options) {
  std::vector<std::uint64_t> sampled;
  const std::uint64_t count = plan(options, sampled);
  EnumerationReport report;
  report.dims = options.dims;
  for (std::uint64_t k = 0; k < count; ++k) {
    report.records.push_back(evaluate_subset(options.dims, sampled.empty() ? k + 1 : sampled[k]));
    tally(report.summary, report.records.back());
  }
  return report;
}

void write_csv_header(std::size_t n, std::ostream& out) {
  out << "id,size,star,reisner";
  for (std::size_t i = 1; i <= n; ++i) out << ",incl_" << i;
  out << ",agree,closure_ok,paths_ok,euler_ok\n";
}

void write_csv_row(const EnumerationRecord& rec, std::ostream& out) {
  out << rec.id << ',' << rec.size << ',' << rec.star << ',' << rec.reisner;
  for (bool incl : rec.inclusion) out << ',' << incl;
  out << ',' << rec.agree << ',' << rec.closure_ok << ',' << rec.paths_ok << ',' << rec.euler_ok
      << '\n';
}

void write_csv(const EnumerationReport& report, std::ostream& out) {
  write_csv_header(report.dims.size(), out);
  for (const auto& rec : report.records) write_csv_row(rec, out);
}

bool satisfies_path_contract(const PointSet& X, const GridPoint& p, const GridPoint& q,
                             const std::vector<GridPoint>& path) {
  const int d = hamming_distance(p, q);
  if (static_cast<int>(path.size()) != d + 1 || path.front() != p || path.back() != q) return false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto& u = path[k];
    if (!X.contains(u)) return false;
    for (int c = 0; c < X.n(); ++c) {
      if (u.coords[c] != p.coords[c] && u.coords[c] != q.coords[c]) return false;
    }
    if (k > 0 && hamming_distance(path[k - 1], u) != 1) return false;
  }
  return true;
}

}  // namespace acmpts
