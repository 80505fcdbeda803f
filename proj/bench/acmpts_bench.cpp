// Serial reference versus OpenMP kernels on fixed workloads. Every pair of
// runs is also compared for identical results.
//
//   acmpts_bench [--quick]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#include "acmpts/enumerate.hpp"
#include "acmpts/hilbert.hpp"
#include "acmpts/star.hpp"

using namespace acmpts;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4f s   openmp %9.4f s   speedup %5.2fx   %s\n", name, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

// Deterministic dense-ish configuration on an r x r x r grid.
PointSet pattern(int r) {
  std::vector<GridPoint> pts;
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      for (int c = 1; c <= r; ++c) {
        if ((a * 7 + b * 5 + c * 3) % 5 != 0) pts.push_back({a, b, c});
      }
    }
  }
  return canonicalize(std::span<const GridPoint>(pts));
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 1 : 3;
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  bool ok = true;

  {
    const PointSet X = pattern(quick ? 5 : 8);
    StarVerdict s, p;
    const double ts = seconds([&] { s = check_star_serial(X, 3, WitnessScan::exhaustive); }, reps);
    const double tp = seconds([&] { p = check_star(X, 3, WitnessScan::exhaustive); }, reps);
    bool same = s.satisfied == p.satisfied && s.witnesses.size() == p.witnesses.size();
    for (std::size_t k = 0; same && k < s.witnesses.size(); ++k) {
      same = s.witnesses[k].p == p.witnesses[k].p && s.witnesses[k].q == p.witnesses[k].q;
    }
    report("check_star (exhaustive)", ts, tp, same);
    ok = ok && same;
  }
  {
    const PointSet X = pattern(quick ? 3 : 4);
    const MultiDegree box(3, quick ? 3 : 4);
    HilbertTable s, p;
    const double ts = seconds([&] { s = hilbert_table_serial(X.points(), box); }, reps);
    const double tp = seconds([&] { p = hilbert_table(X, box); }, reps);
    report("hilbert_table", ts, tp, s == p);
    ok = ok && s == p;
  }
  {
    const EnumerationOptions opts{{3, 3, 3}, quick ? 100u : 1000u, 7};
    EnumerationReport s, p;
    const double ts = seconds([&] { s = enumerate_serial(opts); }, 1);
    const double tp = seconds([&] { p = enumerate(opts); }, 1);
    bool same = s.records.size() == p.records.size();
    for (std::size_t k = 0; same && k < s.records.size(); ++k) {
      same = s.records[k].id == p.records[k].id && s.records[k].star == p.records[k].star &&
             s.records[k].reisner == p.records[k].reisner;
    }
    report("enumerate (random 3x3x3)", ts, tp, same);
    ok = ok && same;
  }
  return ok ? 0 : 1;
}
