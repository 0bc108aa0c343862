#include "fmds/codes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "fmds/combinatorics.hpp"

namespace fmds {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 7> kConstructionNames{{
    {Construction::External, "external"},
    {Construction::FourierRows, "fourier"},
    {Construction::ExtendedTwoColumns, "extended"},
    {Construction::IdentityDim3, "even3"},
    {Construction::StandardForm, "standard"},
    {Construction::Dual, "dual"},
    {Construction::SearchWitness, "search-witness"},
}};

// Unbiased draw from [0, bound) that depends only on the engine's output
// sequence, unlike std::uniform_int_distribution.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

}  // namespace

std::string_view to_string(Construction kind) noexcept {
  for (const auto& [k, name] : kConstructionNames) {
    if (k == kind) return name;
  }
  return "external";
}

std::optional<Construction> construction_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kConstructionNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

LinearCode::LinearCode(FieldMatrix generator, Provenance provenance)
    : generator_(std::move(generator)), provenance_(std::move(provenance)) {
  const std::size_t r = rank(generator_);
  if (r != generator_.rows()) {
    throw Error(Errc::RankDeficient, "generator has rank " + std::to_string(r) + " but " +
                                         std::to_string(generator_.rows()) + " rows");
  }
}

LinearCode::LinearCode(FieldMatrix generator, FieldMatrix check, Provenance provenance)
    : LinearCode(std::move(generator), std::move(provenance)) {
  if (check.cols() != n() || check.rows() != n() - k()) {
    throw Error(Errc::LengthMismatch, "check matrix must be (n-k) x n");
  }
  if (!(generator_ * check.transpose()).is_zero()) {
    throw Error(Errc::InvalidArgument, "generator * check^T is not zero");
  }
  check_ = std::move(check);
}

LinearCode code_from_rows(const FieldPtr& field, const RowSelection& sel) {
  FieldMatrix rows = select_rows(fourier_matrix(field), sel);
  return LinearCode(std::move(rows), Provenance{Construction::FourierRows, sel});
}

LinearCode extend_two_columns(const LinearCode& fourier_code) {
  const auto& prov = fourier_code.provenance();
  if (prov.kind != Construction::FourierRows || !prov.selection ||
      fourier_code.n() != fourier_code.field().q() - 1) {
    throw Error(Errc::WrongProvenance, "two-column extension needs rows of F_{q-1}");
  }
  const std::size_t r = fourier_code.k();
  if (r < 2) throw Error(Errc::InvalidArgument, "two-column extension needs at least 2 rows");
  FieldMatrix vw(fourier_code.field_ptr(), r, 2);
  vw.set(0, 0, FieldElement{1});
  vw.set(r - 1, 1, FieldElement{1});
  return LinearCode(FieldMatrix::hconcat(vw, fourier_code.generator()),
                    Provenance{Construction::ExtendedTwoColumns, prov.selection});
}

LinearCode extend_identity_columns_dim3(const FieldPtr& field, const RowSelection& sel) {
  if (field->p() != 2) {
    throw Error(Errc::FieldNotEven, "GF(" + std::to_string(field->q()) + ") has odd order");
  }
  if (field->q() < 4) throw Error(Errc::FieldTooSmall, "F_{q-1} has fewer than 3 rows");
  if (sel.count != 3) throw Error(Errc::InvalidArgument, "dimension-3 construction takes exactly 3 rows");
  const LinearCode rows = code_from_rows(field, sel);
  return LinearCode(FieldMatrix::hconcat(FieldMatrix::identity(field, 3), rows.generator()),
                    Provenance{Construction::IdentityDim3, sel});
}

MdsCertificate certify_mds(const LinearCode& code, const CertifyMode& mode) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const FieldMatrix& g = code.generator();
  const std::vector<std::size_t> rows = all_indices(k);
  MdsCertificate cert;
  cert.mode = mode;

  if (mode.kind == CertifyMode::Kind::Full) {
    const std::uint64_t total = binomial(n, k);
    if (total > mode.budget) {
      throw Error(Errc::CombinationOverflow,
                  "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                      " minors exceed budget " + std::to_string(mode.budget));
    }
    if (auto cols = first_singular_column_set(g, rows, k)) {
      cert.verdict = false;
      cert.minors_checked = combination_rank(*cols, n) + 1;
      cert.counterexample = Minor{rows, std::move(*cols)};
    } else {
      cert.minors_checked = total;
    }
    return cert;
  }

  std::mt19937_64 rng(mode.seed);
  std::vector<std::size_t> pool = all_indices(n);
  for (std::uint64_t s = 0; s < mode.samples; ++s) {
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(draw_below(rng, n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> cols(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(cols.begin(), cols.end());
    ++cert.minors_checked;
    if (determinant(submatrix(g, rows, cols)).value == 0) {
      cert.verdict = false;
      cert.counterexample = Minor{rows, std::move(cols)};
      return cert;
    }
  }
  return cert;
}

bool is_standard_form(const FieldMatrix& generator) {
  const std::size_t k = generator.rows();
  if (generator.cols() < k) return false;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (generator(r, c).value != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

StandardForm standard_form(const LinearCode& code) {
  const RrefResult reduced = rref(code.generator());
  std::vector<std::size_t> perm = reduced.pivot_columns;
  std::vector<bool> is_pivot(code.n(), false);
  for (std::size_t c : perm) is_pivot[c] = true;
  for (std::size_t c = 0; c < code.n(); ++c) {
    if (!is_pivot[c]) perm.push_back(c);
  }
  FieldMatrix generator = reduced.reduced.permute_columns(perm);
  return {LinearCode(std::move(generator), Provenance{Construction::StandardForm, code.provenance().selection}),
          std::move(perm)};
}

MdsCertificate certify_mds_standard(const LinearCode& code, std::uint64_t budget) {
  const FieldMatrix& g = code.generator();
  if (!is_standard_form(g)) throw Error(Errc::NotStandardForm, "left block is not the identity");
  const std::size_t k = code.k();
  const std::size_t redundancy = code.n() - k;
  const std::size_t max_j = std::min(k, redundancy);

  // Each k x k generator minor is, up to sign, exactly one j x j minor of A
  // (j = number of A columns used), so the counts sum to C(n, k); j = 0 is
  // the identity block itself.
  std::uint64_t total = 1;
  for (std::size_t j = 1; j <= max_j; ++j) {
    total = saturating_add(total, saturating_mul(binomial(k, j), binomial(redundancy, j)));
  }
  if (total > budget) {
    throw Error(Errc::CombinationOverflow,
                std::to_string(total) + " minors exceed budget " + std::to_string(budget));
  }

  MdsCertificate cert;
  cert.mode = CertifyMode::full(budget);
  cert.minors_checked = 1;
  if (max_j == 0) return cert;
  std::vector<std::size_t> rows = all_indices(k);
  std::vector<std::size_t> a_cols(redundancy);
  std::iota(a_cols.begin(), a_cols.end(), k);
  const FieldMatrix a = submatrix(g, rows, a_cols);

  for (std::size_t j = 1; j <= max_j; ++j) {
    MinorScan scan = minors_all_nonzero(a, j, budget);
    cert.minors_checked += scan.minors_checked;
    if (!scan.verdict) {
      // Identity columns for the rows outside the A-minor complete it to a
      // k x k generator minor with the same determinant up to sign.
      std::vector<std::size_t> cols;
      std::vector<bool> in_minor(k, false);
      for (std::size_t r : scan.counterexample->rows) in_minor[r] = true;
      for (std::size_t r = 0; r < k; ++r) {
        if (!in_minor[r]) cols.push_back(r);
      }
      for (std::size_t c : scan.counterexample->cols) cols.push_back(k + c);
      std::sort(cols.begin(), cols.end());
      cert.verdict = false;
      cert.counterexample = Minor{std::move(rows), std::move(cols)};
      return cert;
    }
  }
  return cert;
}

LinearCode dual_code(const LinearCode& code) {
  const StandardForm sf = standard_form(code);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const FieldContext& f = code.field();
  const FieldMatrix& g = sf.code.generator();

  // (-A^T | I_{n-k}) in the permuted coordinates.
  FieldMatrix permuted(code.field_ptr(), n - k, n);
  for (std::size_t i = 0; i < n - k; ++i) {
    for (std::size_t j = 0; j < k; ++j) permuted.set(i, j, f.neg(g(j, k + i)));
    permuted.set(i, k + i, FieldElement{1});
  }
  std::vector<std::size_t> inverse(n);
  for (std::size_t j = 0; j < n; ++j) inverse[sf.permutation[j]] = j;
  return LinearCode(permuted.permute_columns(inverse), code.generator(),
                    Provenance{Construction::Dual, code.provenance().selection});
}

LinearCode with_check(const LinearCode& code) {
  if (code.check()) return code;
  return LinearCode(code.generator(), dual_code(code).generator(), code.provenance());
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n() || a.k() != b.k() || !a.field().same_field(b.field())) return false;
  return rref(a.generator()).reduced == rref(b.generator()).reduced;
}

}  // namespace fmds
