#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace acmpts {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
/// arithmetic and restarts with GMP integers if an intermediate overflows,
/// so the result is exact in either case.
std::size_t exact_rank(const IntMatrix& m);

/// Same elimination directly on arbitrary-precision entries (row-major).
std::size_t exact_rank(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols);

}  // namespace acmpts
