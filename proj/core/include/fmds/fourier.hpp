#pragma once

#include <cstddef>

#include "fmds/matrix.hpp"

namespace fmds {

/// Rows start, start + step, ..., start + (count - 1) * step of an n x n
/// Fourier matrix, reduced mod n (row n + i is row i). 0-based.
struct RowSelection {
  std::size_t start = 0;
  std::size_t count = 1;
  std::size_t step = 1;

  bool operator==(const RowSelection&) const = default;
};

/// Throws StepNotCoprime or InvalidArgument if `sel` is not valid for order n.
void validate(const RowSelection& sel, std::size_t n);

/// Row indices selected from an order-n Fourier matrix.
std::vector<std::size_t> selected_rows(const RowSelection& sel, std::size_t n);

/// omega^((q-1)/n), a primitive n-th root of unity. NoRootOfUnity unless n | q-1.
FieldElement root_of_unity(const FieldContext& field, std::size_t n);

/// n x n matrix with entry (i, j) = w^(i*j) for w = root_of_unity(field, n).
FieldMatrix fourier_matrix(const FieldPtr& field, std::size_t n);
/// n = q - 1 with root omega.
FieldMatrix fourier_matrix(const FieldPtr& field);

/// The reversed-exponent companion: entry (i, j) = w^(-i*j), so F * R = n I.
FieldMatrix fourier_reverse(const FieldPtr& field, std::size_t n);

FieldMatrix select_rows(const FieldMatrix& fourier, const RowSelection& sel);

/// Whether the first three rows of F_{q-1} have only nonzero 2x2 minors.
/// Guaranteed when q - 1 is odd. Fields with q - 1 < 3 have no three distinct
/// rows and report false.
bool check_first_three_rows_2x2(const FieldPtr& field);

}  // namespace fmds
