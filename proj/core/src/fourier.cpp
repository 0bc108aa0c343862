#include "fmds/fourier.hpp"

#include <numeric>
#include <string>

namespace fmds {

void validate(const RowSelection& sel, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "empty Fourier matrix");
  if (sel.count < 1 || sel.count > n) {
    throw Error(Errc::InvalidArgument, "row count " + std::to_string(sel.count) + " not in [1, " +
                                           std::to_string(n) + "]");
  }
  if (sel.start >= n) throw Error(Errc::InvalidArgument, "start row " + std::to_string(sel.start) + " >= n");
  if (sel.step < 1 || std::gcd(sel.step, n) != 1) {
    throw Error(Errc::StepNotCoprime, "step " + std::to_string(sel.step) + " not coprime to " + std::to_string(n));
  }
}

std::vector<std::size_t> selected_rows(const RowSelection& sel, std::size_t n) {
  validate(sel, n);
  std::vector<std::size_t> rows(sel.count);
  for (std::size_t t = 0; t < sel.count; ++t) rows[t] = (sel.start + t * (sel.step % n)) % n;
  return rows;
}

FieldElement root_of_unity(const FieldContext& field, std::size_t n) {
  const std::size_t order = field.q() - 1;
  if (n == 0 || order % n != 0) {
    throw Error(Errc::NoRootOfUnity,
                std::to_string(n) + " does not divide " + std::to_string(order) + " in GF(" + std::to_string(field.q()) + ")");
  }
  return field.exp(static_cast<std::int64_t>(order / n));
}

namespace {

FieldMatrix power_table(const FieldPtr& field, std::size_t n, bool reversed) {
  (void)root_of_unity(*field, n);
  const std::size_t stride = (field->q() - 1) / n;
  FieldMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t e = (i * j) % n;
      const std::size_t exponent = reversed ? (n - e) % n : e;
      out.set(i, j, field->exp(static_cast<std::int64_t>(exponent * stride)));
    }
  }
  return out;
}

}  // namespace

FieldMatrix fourier_matrix(const FieldPtr& field, std::size_t n) { return power_table(field, n, false); }

FieldMatrix fourier_matrix(const FieldPtr& field) { return fourier_matrix(field, field->q() - 1); }

FieldMatrix fourier_reverse(const FieldPtr& field, std::size_t n) { return power_table(field, n, true); }

FieldMatrix select_rows(const FieldMatrix& fourier, const RowSelection& sel) {
  if (!fourier.square()) throw Error(Errc::NotSquare, "Fourier matrix must be square");
  const std::vector<std::size_t> rows = selected_rows(sel, fourier.rows());
  FieldMatrix out(fourier.field_ptr(), rows.size(), fourier.cols());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t c = 0; c < fourier.cols(); ++c) out.set(t, c, fourier(rows[t], c));
  }
  return out;
}

bool check_first_three_rows_2x2(const FieldPtr& field) {
  const std::size_t n = field->q() - 1;
  if (n < 3) return false;
  const FieldMatrix a = select_rows(fourier_matrix(field, n), RowSelection{0, 3, 1});
  return minors_all_nonzero(a, 2).verdict;
}

}  // namespace fmds
