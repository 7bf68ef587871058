#pragma once

// Turan coefficients binom(n, k)_d: the number of k-cliques of the Turan
// graph T_d(n), extended by zero to k > n, k < 0 and n < 0.

#include <cstdint>
#include <vector>

#include "flagcx/bigint.hpp"
#include "flagcx/report.hpp"

namespace flagcx {

/// Part sizes of T_d(n): n mod d parts of size ceil(n/d), the rest floor(n/d).
/// Larger parts come first.
std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t d);

/// k-th elementary symmetric function of the part sizes of T_d(n).
BigInt turan_coeff(std::int64_t n, std::int64_t k, std::int64_t d);

struct TuranRow {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::vector<BigInt> values;  // binom(n, 0)_d ... binom(n, d)_d

  friend bool operator==(const TuranRow&, const TuranRow&) = default;
};

TuranRow turan_row(std::int64_t n, std::int64_t d);

/// The same row computed by repeatedly stepping m -> m + d with the
/// Pascal-type triangle of the h = f relation, starting from the unique
/// m in [1, d] congruent to n mod d.
TuranRow turan_row_pascal(std::int64_t n, std::int64_t d);

/// One triangle step: row for m (length d + 1) -> row for m + d.
std::vector<BigInt> pascal_step(const std::vector<BigInt>& row);

/// h(Δ(T_d(n))) == f(Δ(T_d(n - d))) (zero padded), for n >= d.
CheckReport check_h_equals_f(std::int64_t n, std::int64_t d);

/// sum_k binom(m, k)_d == binom(m + d, d)_d.
CheckReport check_sum_identity(std::int64_t m, std::int64_t d);

}  // namespace flagcx
