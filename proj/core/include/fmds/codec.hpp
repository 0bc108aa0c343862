#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fmds/codes.hpp"

namespace fmds {

struct Word {
  std::vector<FieldElement> symbols;
  /// Empty, or one flag per symbol; true marks an erased position whose symbol is ignored.
  std::vector<bool> erasures;

  [[nodiscard]] std::size_t erased_count() const noexcept;
  bool operator==(const Word&) const = default;
};

struct DecodeResult {
  std::vector<FieldElement> message;
  Word codeword;
  /// Symbol positions changed (or filled, for erasures).
  std::size_t corrections = 0;
};

/// message * generator. LengthMismatch unless message has k symbols.
Word encode(std::span<const FieldElement> message, const LinearCode& code);

/// H * received^T, n - k symbols; zero exactly for codewords.
std::vector<FieldElement> syndrome(const Word& received, const LinearCode& code);

/// Solves on the first k unerased positions and re-encodes. TooManyErasures
/// below k survivors; Singular if those columns are dependent (the code is not
/// MDS); DecodingFailure if the surviving symbols are not consistent with
/// any codeword.
DecodeResult erasure_decode(const Word& received, const LinearCode& code);

/// Bounded-distance decoding up to t = floor((n - k) / 2) symbol errors by
/// enumerating error supports in increasing weight. DecodingFailure when no
/// codeword lies within distance t. `budget` caps the number of supports tried.
DecodeResult error_decode(const Word& received, const LinearCode& code,
                          std::uint64_t budget = kDefaultMinorBudget);

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b);

}  // namespace fmds
