#include "fmds/matrix.hpp"

#include <algorithm>
#include <string>

#include "fmds/combinatorics.hpp"

namespace fmds {

namespace {

void require_same_field(const FieldContext& a, const FieldContext& b) {
  if (!a.same_field(b)) {
    throw Error(Errc::ContextMismatch, to_string(a.spec()) + " vs " + to_string(b.spec()));
  }
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= bound || (i > 0 && idx[i] <= idx[i - 1])) {
      throw Error(Errc::IndexOutOfRange, std::string(what) + " indices must be strictly increasing and < " +
                                             std::to_string(bound));
    }
  }
}

// Working copy of entries as raw encodings for elimination kernels.
std::vector<std::uint32_t> raw(const FieldMatrix& m) {
  std::vector<std::uint32_t> out(m.entries().size());
  std::transform(m.entries().begin(), m.entries().end(), out.begin(), [](FieldElement e) { return e.value; });
  return out;
}

}  // namespace

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(Errc::LengthMismatch, "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                          std::to_string(entries_.size()));
  }
  for (FieldElement e : entries_) (void)field_->element(e.value);
}

FieldMatrix FieldMatrix::identity(FieldPtr field, std::size_t n) {
  FieldMatrix out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = FieldElement{1};
  return out;
}

FieldMatrix FieldMatrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::LengthMismatch, "ragged rows");
    for (std::uint32_t v : row) entries.emplace_back(v);
  }
  return FieldMatrix(std::move(field), r, c, std::move(entries));
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(Errc::IndexOutOfRange, "matrix index");
  return (*this)(r, c);
}

void FieldMatrix::set(std::size_t r, std::size_t c, FieldElement value) {
  if (r >= rows_ || c >= cols_) throw Error(Errc::IndexOutOfRange, "matrix index");
  entries_[r * cols_ + c] = field_->element(value.value);
}

std::vector<FieldElement> FieldMatrix::column(std::size_t c) const {
  if (c >= cols_) throw Error(Errc::IndexOutOfRange, "column index");
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c);
  }
  return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  require_same_field(*field_, *rhs.field_);
  if (cols_ != rhs.rows_) throw Error(Errc::LengthMismatch, "inner dimensions differ");
  const FieldContext& f = *field_;
  FieldMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::uint32_t a = (*this)(i, l).value;
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto& dst = out.entries_[i * rhs.cols_ + j].value;
        dst = f.add_raw(dst, f.mul_raw(a, rhs(l, j).value));
      }
    }
  }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
  require_same_field(*field_, *rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::LengthMismatch, "shapes differ");
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = FieldElement{field_->add_raw(entries_[i].value, rhs.entries_[i].value)};
  }
  return out;
}

FieldMatrix FieldMatrix::scaled(FieldElement factor) const {
  (void)field_->element(factor.value);
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = FieldElement{field_->mul_raw(entries_[i].value, factor.value)};
  }
  return out;
}

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](FieldElement e) { return e.value == 0; });
}

FieldMatrix FieldMatrix::hconcat(const FieldMatrix& lhs, const FieldMatrix& rhs) {
  require_same_field(*lhs.field_, *rhs.field_);
  if (lhs.rows_ != rhs.rows_) throw Error(Errc::LengthMismatch, "row counts differ");
  FieldMatrix out(lhs.field_, lhs.rows_, lhs.cols_ + rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    std::copy(lhs.row(r).begin(), lhs.row(r).end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(r * out.cols_));
    std::copy(rhs.row(r).begin(), rhs.row(r).end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(r * out.cols_ + lhs.cols_));
  }
  return out;
}

FieldMatrix FieldMatrix::permute_columns(std::span<const std::size_t> order) const {
  if (order.size() != cols_) throw Error(Errc::LengthMismatch, "permutation length");
  std::vector<bool> used(cols_, false);
  for (std::size_t c : order) {
    if (c >= cols_ || used[c]) throw Error(Errc::InvalidArgument, "not a permutation");
    used[c] = true;
  }
  FieldMatrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[r * cols_ + c] = (*this)(r, order[c]);
  }
  return out;
}

bool FieldMatrix::operator==(const FieldMatrix& other) const noexcept {
  return rows_ == other.rows_ && cols_ == other.cols_ && field_->same_field(*other.field_) &&
         entries_ == other.entries_;
}

std::vector<FieldElement> multiply(std::span<const FieldElement> row, const FieldMatrix& m) {
  if (row.size() != m.rows()) throw Error(Errc::LengthMismatch, "vector length differs from matrix rows");
  const FieldContext& f = m.field();
  std::vector<FieldElement> out(m.cols());
  for (std::size_t i = 0; i < row.size(); ++i) {
    const std::uint32_t a = f.element(row[i].value).value;
    if (a == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j].value = f.add_raw(out[j].value, f.mul_raw(a, m(i, j).value));
    }
  }
  return out;
}

FieldElement determinant(const FieldMatrix& m) {
  if (!m.square()) {
    throw Error(Errc::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const FieldContext& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::uint32_t> a = raw(m);
  std::uint32_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return FieldElement{0};
    if (pivot != col) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                       a.begin() + static_cast<std::ptrdiff_t>(col * n));
      det = f.sub_raw(0, det);
    }
    const std::uint32_t pv = a[col * n + col];
    det = f.mul_raw(det, pv);
    const std::uint32_t pinv = f.inv_raw(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint32_t factor = f.mul_raw(a[r * n + col], pinv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) {
        a[r * n + c] = f.sub_raw(a[r * n + c], f.mul_raw(factor, a[col * n + c]));
      }
    }
  }
  return FieldElement{det};
}

RrefResult rref(const FieldMatrix& m) {
  const FieldContext& f = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a = raw(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + cols),
                       a.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    const std::uint32_t pinv = f.inv_raw(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul_raw(a[r * cols + j], pinv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = f.sub_raw(a[i * cols + j], f.mul_raw(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<FieldElement> entries(a.size());
  std::transform(a.begin(), a.end(), entries.begin(), [](std::uint32_t v) { return FieldElement{v}; });
  return {FieldMatrix(m.field_ptr(), rows, cols, std::move(entries)), r, std::move(pivots)};
}

FieldMatrix submatrix(const FieldMatrix& m, std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) {
  check_indices(row_idx, m.rows(), "row");
  check_indices(col_idx, m.cols(), "column");
  std::vector<FieldElement> entries;
  entries.reserve(row_idx.size() * col_idx.size());
  for (std::size_t r : row_idx) {
    for (std::size_t c : col_idx) entries.push_back(m(r, c));
  }
  return FieldMatrix(m.field_ptr(), row_idx.size(), col_idx.size(), std::move(entries));
}

FieldMatrix solve(const FieldMatrix& m, const FieldMatrix& rhs) {
  if (!m.square()) {
    throw Error(Errc::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (rhs.rows() != m.rows()) throw Error(Errc::LengthMismatch, "right-hand side rows");
  const std::size_t n = m.rows();
  const RrefResult reduced = rref(FieldMatrix::hconcat(m, rhs));
  if (reduced.rank < n || reduced.pivot_columns[n - 1] >= n) {
    throw Error(Errc::Singular, "coefficient matrix is singular");
  }
  std::vector<std::size_t> rows(n);
  std::vector<std::size_t> cols(rhs.cols());
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  for (std::size_t j = 0; j < rhs.cols(); ++j) cols[j] = n + j;
  return submatrix(reduced.reduced, rows, cols);
}

std::optional<std::vector<std::size_t>> first_singular_column_set(const FieldMatrix& m,
                                                                  std::span<const std::size_t> rows,
                                                                  std::size_t j) {
  const FieldContext& f = m.field();
  const std::size_t n = m.cols();
  if (j == 0) return std::nullopt;
  if (j > n || rows.size() != j) throw Error(Errc::InvalidArgument, "minor size exceeds matrix");

  // basis[d] is the reduced image of the d-th chosen column: 1 at pivot[d] and
  // 0 at every earlier pivot, so reducing a new column in stack order clears
  // each pivot coordinate for good.
  std::vector<std::uint32_t> basis(j * j);
  std::vector<std::size_t> pivot(j);
  std::vector<std::size_t> chosen(j);
  std::vector<std::uint32_t> vec(j);

  auto dfs = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    for (std::size_t c = start; c + (j - depth) <= n; ++c) {
      for (std::size_t i = 0; i < j; ++i) vec[i] = m(rows[i], c).value;
      for (std::size_t d = 0; d < depth; ++d) {
        const std::uint32_t factor = vec[pivot[d]];
        if (factor == 0) continue;
        const std::uint32_t* b = &basis[d * j];
        for (std::size_t i = 0; i < j; ++i) vec[i] = f.sub_raw(vec[i], f.mul_raw(factor, b[i]));
      }
      std::size_t lead = 0;
      while (lead < j && vec[lead] == 0) ++lead;
      chosen[depth] = c;
      if (lead == j) {
        for (std::size_t d = depth + 1; d < j; ++d) chosen[d] = chosen[d - 1] + 1;
        return true;
      }
      const std::uint32_t lead_inv = f.inv_raw(vec[lead]);
      std::uint32_t* b = &basis[depth * j];
      for (std::size_t i = 0; i < j; ++i) b[i] = f.mul_raw(vec[i], lead_inv);
      pivot[depth] = lead;
      if (depth + 1 < j && self(self, depth + 1, c + 1)) return true;
    }
    return false;
  };

  if (dfs(dfs, 0, 0)) return chosen;
  return std::nullopt;
}

MinorScan minors_all_nonzero(const FieldMatrix& m, std::size_t j, std::uint64_t budget) {
  if (j > std::min(m.rows(), m.cols())) {
    throw Error(Errc::InvalidArgument, "minor size " + std::to_string(j) + " exceeds matrix dimensions");
  }
  const std::uint64_t row_sets = binomial(m.rows(), j);
  const std::uint64_t col_sets = binomial(m.cols(), j);
  const std::uint64_t total = saturating_mul(row_sets, col_sets);
  if (total > budget) {
    throw Error(Errc::CombinationOverflow,
                std::to_string(total) + " minors exceed budget " + std::to_string(budget));
  }
  MinorScan scan;
  if (j == 0) {
    scan.minors_checked = 1;
    return scan;
  }
  std::vector<std::size_t> rows = first_combination(j);
  do {
    if (auto cols = first_singular_column_set(m, rows, j)) {
      scan.verdict = false;
      scan.minors_checked += combination_rank(*cols, m.cols()) + 1;
      scan.counterexample = Minor{rows, std::move(*cols)};
      return scan;
    }
    scan.minors_checked += col_sets;
  } while (next_combination(rows, m.rows()));
  return scan;
}

}  // namespace fmds
