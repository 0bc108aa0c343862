#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fmds/galois.hpp"

namespace fmds {

/// Dense row-major matrix over a shared FieldContext. Value type; the field is
/// shared, the entries are owned.
class FieldMatrix {
 public:
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  /// Entries are validated against the field (ContextMismatch).
  FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static FieldMatrix identity(FieldPtr field, std::size_t n);
  /// Convenience for tests and literals: row lists of encodings.
  static FieldMatrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] const FieldContext& field() const noexcept { return *field_; }
  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }

  [[nodiscard]] FieldElement operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, FieldElement value);

  [[nodiscard]] std::span<const FieldElement> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::vector<FieldElement> column(std::size_t c) const;
  [[nodiscard]] const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  [[nodiscard]] FieldMatrix transpose() const;
  [[nodiscard]] FieldMatrix operator*(const FieldMatrix& rhs) const;
  [[nodiscard]] FieldMatrix operator+(const FieldMatrix& rhs) const;
  [[nodiscard]] FieldMatrix scaled(FieldElement factor) const;
  [[nodiscard]] bool is_zero() const noexcept;

  /// Columns of lhs followed by columns of rhs.
  [[nodiscard]] static FieldMatrix hconcat(const FieldMatrix& lhs, const FieldMatrix& rhs);
  /// New matrix whose column j is column order[j] of this one.
  [[nodiscard]] FieldMatrix permute_columns(std::span<const std::size_t> order) const;

  bool operator==(const FieldMatrix& other) const noexcept;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

/// Row vector times matrix.
std::vector<FieldElement> multiply(std::span<const FieldElement> row, const FieldMatrix& m);

/// Exact determinant by Gaussian elimination (first nonzero pivot in column order).
FieldElement determinant(const FieldMatrix& m);

struct RrefResult {
  FieldMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const FieldMatrix& m);

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

/// Index lists must be strictly increasing and in range (IndexOutOfRange).
FieldMatrix submatrix(const FieldMatrix& m, std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx);

/// Unique X with m * X = rhs; Singular if m is not invertible.
FieldMatrix solve(const FieldMatrix& m, const FieldMatrix& rhs);

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool operator==(const Minor&) const = default;
};

struct MinorScan {
  bool verdict = true;
  std::uint64_t minors_checked = 0;
  std::optional<Minor> counterexample;
};

/// Checks every j x j minor, row sets then column sets in lexicographic order,
/// stopping at the first singular one. minors_checked counts minors up to and
/// including the failure (or all of them). Throws CombinationOverflow when
/// C(rows, j) * C(cols, j) exceeds the budget.
MinorScan minors_all_nonzero(const FieldMatrix& m, std::size_t j,
                             std::uint64_t budget = kDefaultMinorBudget);

/// Lexicographically first j-subset of columns whose restriction to `rows`
/// is singular; empty optional when every such minor is nonzero. Shares
/// elimination work across subsets with a common prefix.
std::optional<std::vector<std::size_t>> first_singular_column_set(const FieldMatrix& m,
                                                                  std::span<const std::size_t> rows,
                                                                  std::size_t j);

}  // namespace fmds
