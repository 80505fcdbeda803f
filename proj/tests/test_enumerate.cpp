#include <doctest.h>

#include <sstream>

#include "acmpts/enumerate.hpp"
#include "acmpts/error.hpp"
#include "acmpts/reisner.hpp"
#include "acmpts/star.hpp"
#include "support.hpp"

using namespace acmpts;

namespace {

bool same_records(const EnumerationReport& a, const EnumerationReport& b) {
  if (a.records.size() != b.records.size()) return false;
  std::ostringstream x, y;
  write_csv(a, x);
  write_csv(b, y);
  return x.str() == y.str();
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("exhaustive 2x2x2") {
    const EnumerationReport r = enumerate({{2, 2, 2}, std::nullopt, 0});
    CHECK(r.summary.records == 255);
    CHECK(r.summary.agreements == 255);
    CHECK(r.summary.passed());
    CHECK(same_records(r, enumerate_serial({{2, 2, 2}, std::nullopt, 0})));
    // Ids follow the lexicographic cell order.
    CHECK(r.records.front().id == 1);
    CHECK(subset_points({2, 2, 2}, 1) == std::vector<GridPoint>{{1, 1, 1}});
    CHECK(subset_points({2, 2, 2}, 0x81) == std::vector<GridPoint>{{1, 1, 1}, {2, 2, 2}});
    const auto diag = evaluate_subset({2, 2, 2}, 0x81);
    CHECK_FALSE(diag.star);
    CHECK_FALSE(diag.reisner);
    CHECK(diag.agree);
  }

  TEST_CASE("exhaustive 3x3 ties ACM to the inclusion property") {
    const EnumerationReport r = enumerate({{3, 3}, std::nullopt, 0});
    CHECK(r.summary.records == 511);
    CHECK(r.summary.passed());
    for (const auto& rec : r.records) {
      CHECK(rec.star == (rec.inclusion[0] || rec.inclusion[1]));
      CHECK(rec.star == rec.reisner);
    }
  }

  TEST_CASE("ACM counts match an independent recount") {
    std::size_t acm = 0;
    for (const auto& pts : testing::all_subsets({2, 3})) acm += testing::star_brute(testing::make(pts), 2);
    CHECK(enumerate({{2, 3}, std::nullopt, 0}).summary.acm == acm);
  }

  TEST_CASE("random sampling is seeded and deterministic") {
    const EnumerationOptions opts{{3, 3, 3}, 40, 42};
    const auto ids = random_ids(opts);
    CHECK(ids.size() == 40);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    CHECK(ids == random_ids(opts));
    CHECK(ids != random_ids({{3, 3, 3}, 40, 43}));
    const auto r = enumerate(opts);
    CHECK(r.summary.passed());
    CHECK(same_records(r, enumerate_serial(opts)));
  }

  TEST_CASE("limits") {
    CHECK_THROWS_AS(enumerate({{4, 4, 2}, std::nullopt, 0}), Error);
    CHECK_THROWS_AS(random_ids({{5, 5, 3}, 10, 1}), Error);
    CHECK_THROWS_AS(random_ids({{2, 2}, 16, 1}), Error);  // only 15 nonempty subsets
    CHECK_THROWS_AS(enumerate({{4}, std::nullopt, 0}), Error);
    CHECK(random_ids({{2, 2}, 15, 1}).size() == 15);
  }

  TEST_CASE("streaming visits records in id order") {
    std::vector<std::uint64_t> seen;
    const auto summary = enumerate_stream({{2, 3}, std::nullopt, 0},
                                          [&](const EnumerationRecord& r) { seen.push_back(r.id); });
    CHECK(summary.records == 63);
    REQUIRE(seen.size() == 63);
    for (std::size_t k = 0; k < seen.size(); ++k) CHECK(seen[k] == k + 1);
  }

  TEST_CASE("csv layout") {
    EnumerationReport r;
    r.dims = {2, 2};
    EnumerationRecord rec;
    rec.id = 9;
    rec.size = 2;
    rec.inclusion = {false, true};
    rec.agree = true;
    r.records.push_back(rec);
    std::ostringstream out;
    write_csv(r, out);
    CHECK(out.str() ==
          "id,size,star,reisner,incl_1,incl_2,agree,closure_ok,paths_ok,euler_ok\n"
          "9,2,0,0,0,1,1,1,1,1\n");
  }

  TEST_CASE("path contract checker rejects bad chains") {
    const PointSet X = testing::liaison_eleven();
    const GridPoint p{1, 1, 1}, q{2, 2, 2};
    CHECK(satisfies_path_contract(X, p, q, {{1, 1, 1}, {2, 1, 1}, {2, 1, 2}, {2, 2, 2}}));
    CHECK_FALSE(satisfies_path_contract(X, p, q, {{1, 1, 1}, {2, 2, 2}}));
    CHECK_FALSE(satisfies_path_contract(X, p, q, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {2, 2, 2}}));
  }
}
