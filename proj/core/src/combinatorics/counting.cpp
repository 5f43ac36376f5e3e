#include "gph/combinatorics/counting.hpp"

#include <stdexcept>

#include "gph/common/errors.hpp"

namespace gph::comb {

std::uint64_t count_echelon(int n) {
  if (n < 1) throw std::invalid_argument("count_echelon: n must be >= 1");
  if (n > 32) throw ResourceLimitError("count_echelon: n > 32 overflows 64-bit counts");
  // ways[v-1] = number of nondecreasing prefixes ending at value v.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n), 0);
  ways[0] = 1;  // mu(2) = 1
  for (int j = 3; j <= n + 1; ++j) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n), 0);
    std::uint64_t prefix = 0;
    for (int v = 1; v <= j - 1; ++v) {
      prefix += ways[v - 1];
      next[v - 1] = prefix;  // nondecreasing: any previous value <= v
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways) total += w;
  return total;
}

std::uint64_t partition_count(int n) {
  if (n < 1) throw std::invalid_argument("partition_count: n must be >= 1");
  if (n > 62) throw ResourceLimitError("partition_count: n > 62 overflows 64-bit counts");
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[1] = 1;
  for (int k = 2; k <= n; ++k) {
    std::uint64_t s = 1;
    for (int i = 1; i < k; ++i) s += p[i];
    p[k] = s;
  }
  return p[n];
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw ResourceLimitError("factorial: n out of 64-bit range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<CountRow> counts_table(int n_max) {
  if (n_max < 1 || n_max > 20)
    throw std::invalid_argument("counts_table: n_max must lie in [1, 20]");
  std::vector<CountRow> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    CountRow r;
    r.n = n;
    r.n_factorial = factorial(n);
    r.echelon_count = count_echelon(n);
    r.four_pow_n = std::uint64_t(1) << (2 * n);
    r.partition_count = partition_count(n);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace gph::comb
