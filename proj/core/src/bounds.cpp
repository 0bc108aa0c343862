#include "fmds/bounds.hpp"

#include <algorithm>

#include "fmds/combinatorics.hpp"

namespace fmds {

namespace {

constexpr const char* kNormalization =
    "generator (I_3 | A); row 1 of A all ones; row 2 increasing by exponent of omega; "
    "row 3 injective over nonzero elements";

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out = saturating_mul(out, n - i);
  return out;
}

}  // namespace

std::uint64_t dim3_candidate_count(std::uint32_t q, std::size_t n) {
  if (n < 4 || n > std::size_t{q} + 2) return 0;
  const std::uint64_t columns = n - 3;
  return saturating_mul(binomial(q - 1, columns), falling_factorial(q - 1, columns));
}

SearchOutcome search_dim3(const FieldPtr& field, std::size_t n, std::uint64_t limit) {
  const std::uint32_t q = field->q();
  if (n < 4 || n > std::size_t{q} + 2) {
    throw Error(Errc::InvalidArgument, "search length must lie in [4, q + 2]");
  }
  const std::uint64_t total = dim3_candidate_count(q, n);
  if (total > limit) {
    throw Error(Errc::SearchTooLarge, std::to_string(total) + " candidates exceed limit " + std::to_string(limit));
  }

  const std::size_t width = n - 3;
  const std::size_t nonzero = q - 1;
  SearchOutcome outcome;
  FieldMatrix g = FieldMatrix::hconcat(FieldMatrix::identity(field, 3), FieldMatrix(field, 3, width));
  for (std::size_t c = 0; c < width; ++c) g.set(0, 3 + c, FieldElement{1});

  std::vector<std::size_t> row2 = first_combination(width);
  do {
    for (std::size_t c = 0; c < width; ++c) g.set(1, 3 + c, field->exp(static_cast<std::int64_t>(row2[c])));
    std::vector<std::size_t> row3_set = first_combination(width);
    do {
      std::vector<std::size_t> row3 = row3_set;
      do {
        for (std::size_t c = 0; c < width; ++c) g.set(2, 3 + c, field->exp(static_cast<std::int64_t>(row3[c])));
        ++outcome.examined;
        LinearCode candidate(g, Provenance{Construction::SearchWitness, std::nullopt});
        if (certify_mds_standard(candidate).verdict) {
          outcome.found = true;
          outcome.witness = std::move(candidate);
          return outcome;
        }
      } while (std::next_permutation(row3.begin(), row3.end()));
    } while (next_combination(row3_set, nonzero));
  } while (next_combination(row2, nonzero));
  return outcome;
}

SearchReport max_length_dim3(const FieldPtr& field, std::uint64_t limit) {
  SearchReport report;
  report.q = field->q();
  report.normalization = kNormalization;
  for (std::size_t n = std::size_t{report.q} + 2; n >= 4; --n) {
    SearchOutcome outcome = search_dim3(field, n, limit);
    report.candidates_examined += outcome.examined;
    report.per_length.emplace_back(n, outcome.examined);
    if (outcome.found) {
      report.max_n = n;
      report.witness = std::move(outcome.witness);
      return report;
    }
  }
  report.max_n = 3;  // (I_3) alone is trivially MDS
  return report;
}

}  // namespace fmds
