#include "fmds/combinatorics.hpp"

#include <numeric>

namespace fmds {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i is exact; divide out the common factor first.
    const std::uint64_t g = std::gcd(acc, i);
    acc = saturating_mul(acc / g, (n - k + i) / (i / g));
    if (acc == kSaturated) return kSaturated;
  }
  return acc;
}

std::uint64_t combination_rank(std::span<const std::size_t> subset, std::size_t n) {
  // Count subsets that precede `subset`: at each position, every smaller
  // admissible choice contributes all completions of the remaining slots.
  std::uint64_t rank = 0;
  const std::size_t k = subset.size();
  std::size_t lo = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (std::size_t c = lo; c < subset[pos]; ++c) {
      rank = saturating_add(rank, binomial(n - c - 1, k - pos - 1));
    }
    lo = subset[pos] + 1;
  }
  return rank;
}

bool next_combination(std::vector<std::size_t>& subset, std::size_t n) {
  const std::size_t k = subset.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (subset[i] < n - k + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> out(k);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

}  // namespace fmds
