#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmds/codes.hpp"

namespace fmds {

/// Refuse searches whose normalized candidate space exceeds this.
inline constexpr std::uint64_t kSearchLimit = 100'000'000;

struct SearchOutcome {
  bool found = false;
  std::optional<LinearCode> witness;
  std::uint64_t examined = 0;
};

/// Size of the normalized candidate space for an [n, 3] search over GF(q).
std::uint64_t dim3_candidate_count(std::uint32_t q, std::size_t n);

/// Exhaustive search for an MDS [n, 3] code over `field`, 4 <= n <= q + 2.
///
/// Every MDS [n, 3] code is equivalent to one with generator (I_3 | A) where
/// A has no zero entry. Scaling columns makes row 1 of A all ones, which
/// forces rows 2 and 3 to be injective (a repeat next to two ones is a
/// singular 2x2 minor). Permuting columns then sorts row 2 by exponent of
/// omega. What remains is: row 2 an increasing choice of n - 3 nonzero
/// elements, row 3 any injective (n - 3)-tuple of nonzero elements. Each
/// candidate is certified with certify_mds_standard; the first MDS one is
/// returned as witness.
SearchOutcome search_dim3(const FieldPtr& field, std::size_t n, std::uint64_t limit = kSearchLimit);

struct SearchReport {
  std::uint32_t q = 0;
  std::size_t max_n = 0;
  std::optional<LinearCode> witness;
  std::uint64_t candidates_examined = 0;
  /// (n, candidates examined at that length), in search order.
  std::vector<std::pair<std::size_t, std::uint64_t>> per_length;
  std::string normalization;
};

/// Largest n with an MDS [n, 3] code over `field`, descending from q + 2.
SearchReport max_length_dim3(const FieldPtr& field, std::uint64_t limit = kSearchLimit);

}  // namespace fmds
