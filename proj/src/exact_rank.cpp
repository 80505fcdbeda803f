#include "acmpts/exact_rank.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>

namespace acmpts {
namespace {

__extension__ using Wide = __int128;

// Fraction-free echelon elimination. Pivot columns are skipped when no
// nonzero entry remains below the current row; the divisions by the previous
// pivot stay exact in that case too.
std::optional<std::size_t> rank_int64(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const std::int64_t p = m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Wide v = static_cast<Wide>(p) * m(i, j) - static_cast<Wide>(lead) * m(rank, j);
        v /= prev;
        if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
        m(i, j) = static_cast<std::int64_t>(v);
      }
      m(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_mpz(std::vector<mpz_class> m, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return m[r * cols + c]; };

  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = at(rank, c) * at(i, j) - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& m) {
  if (auto r = rank_int64(m)) return *r;
  std::vector<mpz_class> big(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) big[r * m.cols() + c] = static_cast<long>(m(r, c));
  }
  return rank_mpz(std::move(big), m.rows(), m.cols());
}

std::size_t exact_rank(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols) {
  return rank_mpz(std::move(entries), rows, cols);
}

}  // namespace acmpts
