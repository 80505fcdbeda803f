#include <doctest.h>

#include <random>

#include "acmpts/exact_rank.hpp"
#include "support.hpp"

using namespace acmpts;

namespace {

std::size_t oracle(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) q[r][c] = static_cast<long>(m(r, c));
  }
  return testing::rank_q(std::move(q));
}

}  // namespace

TEST_SUITE("exact_rank") {
  TEST_CASE("small matrices") {
    IntMatrix zero(3, 4);
    CHECK(exact_rank(zero) == 0);

    IntMatrix id(3, 3);
    for (std::size_t k = 0; k < 3; ++k) id(k, k) = 1;
    CHECK(exact_rank(id) == 3);

    IntMatrix dup(2, 3);
    dup(0, 0) = 1, dup(0, 1) = 2, dup(0, 2) = 3;
    dup(1, 0) = 2, dup(1, 1) = 4, dup(1, 2) = 6;
    CHECK(exact_rank(dup) == 1);

    IntMatrix late(3, 3);  // first column empty forces a skipped pivot column
    late(0, 1) = 2, late(1, 1) = 4, late(1, 2) = 1, late(2, 2) = 3;
    CHECK(exact_rank(late) == 2);
  }

  TEST_CASE("agrees with rational elimination on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t rows = 1 + rng() % 7;
      const std::size_t cols = 1 + rng() % 7;
      IntMatrix m(rows, cols);
      const int spread = trial % 2 ? 3 : 50;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          m(r, c) = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
        }
      }
      // Force some dependent rows.
      if (rows > 2 && trial % 3 == 0) {
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c) - m(1, c);
      }
      CHECK(exact_rank(m) == oracle(m));
    }
  }

  TEST_CASE("falls back to big integers on overflow") {
    // Vandermonde rows with nodes 1..12 and powers up to 11: products in
    // the elimination exceed 64 bits.
    const std::size_t n = 12;
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t v = 1;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = v;
        v *= static_cast<std::int64_t>(r + 1);
      }
    }
    CHECK(exact_rank(m) == n);
    CHECK(oracle(m) == n);

    std::vector<mpz_class> big(4);
    big[0] = mpz_class("123456789012345678901234567890");
    big[1] = 2 * big[0];
    big[2] = mpz_class("987654321098765432109876543210");
    big[3] = 2 * big[2];
    CHECK(exact_rank(big, 2, 2) == 1);
  }
}
