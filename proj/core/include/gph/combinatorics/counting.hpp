#pragma once

#include <cstdint>
#include <vector>

namespace gph::comb {

// Number of upper-echelon maps of depth n, counted through the nondecreasing
// characterization (no enumeration, so it works beyond the cap). Bounded by
// 4^n; the exact values follow the Catalan numbers.
std::uint64_t count_echelon(int n);

// Row-partition count P_n from the recursion P_n = 1 + P_1 + ... + P_{n-1},
// P_1 = 1. Satisfies P_n <= 2^n.
std::uint64_t partition_count(int n);

std::uint64_t factorial(int n);  // n <= 20

struct CountRow {
  int n;
  std::uint64_t n_factorial;
  std::uint64_t echelon_count;
  std::uint64_t four_pow_n;
  std::uint64_t partition_count;
};

std::vector<CountRow> counts_table(int n_max);

}  // namespace gph::comb
