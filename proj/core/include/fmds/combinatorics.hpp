#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace fmds {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// a * b, saturating.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept;

/// Position of a strictly increasing k-subset of [0, n) in lexicographic order.
std::uint64_t combination_rank(std::span<const std::size_t> subset, std::size_t n);

/// Advances a strictly increasing k-subset of [0, n) to its lexicographic
/// successor. Returns false (leaving the subset untouched) when it was last.
bool next_combination(std::vector<std::size_t>& subset, std::size_t n);

/// Lexicographically first k-subset, {0, 1, ..., k-1}.
std::vector<std::size_t> first_combination(std::size_t k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace fmds
