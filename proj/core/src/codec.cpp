#include "fmds/codec.hpp"

#include <algorithm>

#include "fmds/combinatorics.hpp"

namespace fmds {

namespace {

void require_length(const Word& received, const LinearCode& code) {
  if (received.symbols.size() != code.n()) {
    throw Error(Errc::LengthMismatch, "received word has " + std::to_string(received.symbols.size()) +
                                          " symbols, code length is " + std::to_string(code.n()));
  }
  if (!received.erasures.empty() && received.erasures.size() != code.n()) {
    throw Error(Errc::LengthMismatch, "erasure mask length differs from code length");
  }
  for (FieldElement s : received.symbols) (void)code.field().element(s.value);
}

FieldMatrix check_matrix(const LinearCode& code) {
  if (code.check()) return *code.check();
  return dual_code(code).generator();
}

// Message whose encoding agrees with `symbols` on `positions` (k of them).
std::vector<FieldElement> solve_message(const LinearCode& code, std::span<const FieldElement> symbols,
                                        std::span<const std::size_t> positions) {
  const std::size_t k = code.k();
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  const FieldMatrix system = submatrix(code.generator(), rows, positions).transpose();
  FieldMatrix rhs(code.field_ptr(), k, 1);
  for (std::size_t i = 0; i < k; ++i) rhs.set(i, 0, symbols[positions[i]]);
  return solve(system, rhs).column(0);
}

std::vector<std::size_t> leading_positions(std::size_t k) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = i;
  return out;
}

}  // namespace

std::size_t Word::erased_count() const noexcept {
  return static_cast<std::size_t>(std::count(erasures.begin(), erasures.end(), true));
}

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size()) throw Error(Errc::LengthMismatch, "words differ in length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

Word encode(std::span<const FieldElement> message, const LinearCode& code) {
  if (message.size() != code.k()) {
    throw Error(Errc::LengthMismatch,
                "message has " + std::to_string(message.size()) + " symbols, code dimension is " + std::to_string(code.k()));
  }
  return Word{multiply(message, code.generator()), {}};
}

std::vector<FieldElement> syndrome(const Word& received, const LinearCode& code) {
  require_length(received, code);
  const FieldMatrix h = check_matrix(code);
  return multiply(received.symbols, h.transpose());
}

DecodeResult erasure_decode(const Word& received, const LinearCode& code) {
  require_length(received, code);
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (received.erasures.empty() || !received.erasures[i]) survivors.push_back(i);
  }
  if (survivors.size() < code.k()) {
    throw Error(Errc::TooManyErasures, std::to_string(code.n() - survivors.size()) + " erasures, at most " +
                                           std::to_string(code.n() - code.k()) + " recoverable");
  }
  const std::span<const std::size_t> basis(survivors.data(), code.k());
  DecodeResult result;
  result.message = solve_message(code, received.symbols, basis);
  result.codeword = encode(result.message, code);
  for (std::size_t i : survivors) {
    if (result.codeword.symbols[i] != received.symbols[i]) {
      throw Error(Errc::DecodingFailure, "unerased symbol " + std::to_string(i) + " disagrees with the recovered codeword");
    }
  }
  result.corrections = received.erased_count();
  return result;
}

DecodeResult error_decode(const Word& received, const LinearCode& code, std::uint64_t budget) {
  require_length(received, code);
  const FieldContext& f = code.field();
  const std::size_t n = code.n();
  const std::size_t t = code.error_capability();

  std::uint64_t supports = 0;
  for (std::size_t w = 1; w <= t; ++w) supports = saturating_add(supports, binomial(n, w));
  if (supports > budget) {
    throw Error(Errc::CombinationOverflow,
                std::to_string(supports) + " error supports exceed budget " + std::to_string(budget));
  }

  const FieldMatrix h = check_matrix(code);
  const std::size_t redundancy = h.rows();
  const std::vector<FieldElement> s = multiply(received.symbols, h.transpose());

  auto finish = [&](std::vector<FieldElement> corrected, std::size_t corrections) {
    DecodeResult result;
    result.message = solve_message(code, corrected, leading_positions(code.k()));
    result.codeword = Word{std::move(corrected), {}};
    result.corrections = corrections;
    return result;
  };

  if (std::all_of(s.begin(), s.end(), [](FieldElement e) { return e.value == 0; })) {
    return finish(received.symbols, 0);
  }

  std::vector<std::size_t> all_rows(redundancy);
  for (std::size_t i = 0; i < redundancy; ++i) all_rows[i] = i;
  FieldMatrix rhs(code.field_ptr(), redundancy, 1);
  for (std::size_t i = 0; i < redundancy; ++i) rhs.set(i, 0, s[i]);

  for (std::size_t w = 1; w <= t; ++w) {
    std::vector<std::size_t> support = first_combination(w);
    do {
      // H_S e = s must be consistent with a unique, fully nonzero solution.
      const RrefResult reduced = rref(FieldMatrix::hconcat(submatrix(h, all_rows, support), rhs));
      if (reduced.rank != w || reduced.pivot_columns.back() >= w) continue;
      bool full_weight = true;
      for (std::size_t i = 0; i < w && full_weight; ++i) full_weight = reduced.reduced(i, w).value != 0;
      if (!full_weight) continue;
      std::vector<FieldElement> corrected = received.symbols;
      for (std::size_t i = 0; i < w; ++i) {
        corrected[support[i]] = f.sub(corrected[support[i]], reduced.reduced(i, w));
      }
      return finish(std::move(corrected), w);
    } while (next_combination(support, n));
  }
  throw Error(Errc::DecodingFailure, "no codeword within distance " + std::to_string(t));
}

}  // namespace fmds
