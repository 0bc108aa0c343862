#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmds/fourier.hpp"
#include "fmds/matrix.hpp"

namespace fmds {

enum class Construction {
  External,            // read from a file or supplied by the caller
  FourierRows,         // rows of F_{q-1} in arithmetic progression
  ExtendedTwoColumns,  // (v, w, A) with v = e_0, w = e_{r-1}
  IdentityDim3,        // (I_3, A), q even
  StandardForm,
  Dual,
  SearchWitness,
};

std::string_view to_string(Construction kind) noexcept;
std::optional<Construction> construction_from_string(std::string_view name) noexcept;

struct Provenance {
  Construction kind = Construction::External;
  std::optional<RowSelection> selection;

  bool operator==(const Provenance&) const = default;
};

/// A linear [n, k] code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  /// Throws RankDeficient if the generator does not have rank k.
  explicit LinearCode(FieldMatrix generator, Provenance provenance = {});
  /// Also checks generator * check^T = 0 (InvalidArgument otherwise).
  LinearCode(FieldMatrix generator, FieldMatrix check, Provenance provenance = {});

  [[nodiscard]] std::size_t n() const noexcept { return generator_.cols(); }
  [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
  [[nodiscard]] const FieldContext& field() const noexcept { return generator_.field(); }
  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return generator_.field_ptr(); }
  [[nodiscard]] const FieldMatrix& generator() const noexcept { return generator_; }
  [[nodiscard]] const std::optional<FieldMatrix>& check() const noexcept { return check_; }
  [[nodiscard]] const Provenance& provenance() const noexcept { return provenance_; }

  /// Zero-dimensional code (empty generator).
  [[nodiscard]] bool degenerate() const noexcept { return k() == 0; }
  /// n - k + 1, the distance when the code is MDS.
  [[nodiscard]] std::size_t mds_distance() const noexcept { return n() - k() + 1; }
  /// floor((d - 1) / 2) for d = mds_distance().
  [[nodiscard]] std::size_t error_capability() const noexcept { return (n() - k()) / 2; }

 private:
  FieldMatrix generator_;
  std::optional<FieldMatrix> check_;
  Provenance provenance_;
};

struct CertifyMode {
  enum class Kind { Full, Sampled };
  Kind kind = Kind::Full;
  std::uint64_t budget = kDefaultMinorBudget;  // full mode only
  std::uint64_t samples = 0;                   // sampled mode only
  std::uint64_t seed = 0;

  static CertifyMode full(std::uint64_t budget = kDefaultMinorBudget) { return {Kind::Full, budget, 0, 0}; }
  static CertifyMode sampled(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::Sampled, kDefaultMinorBudget, samples, seed};
  }
  bool operator==(const CertifyMode&) const = default;
};

struct MdsCertificate {
  bool verdict = true;
  std::uint64_t minors_checked = 0;
  /// A singular k x k minor of the generator (rows are always all k rows).
  std::optional<Minor> counterexample;
  CertifyMode mode;
};

/// Generator from rows of F_{q-1} picked by `sel`.
LinearCode code_from_rows(const FieldPtr& field, const RowSelection& sel);

/// (v, w, A) for a Fourier-row code A of length q - 1 and dimension r >= 2.
/// WrongProvenance for any other input code.
LinearCode extend_two_columns(const LinearCode& fourier_code);

/// (I_3, A) where A is three rows of F_{q-1} in arithmetic progression (default
/// the first three). FieldNotEven for odd q, FieldTooSmall for q = 2.
LinearCode extend_identity_columns_dim3(const FieldPtr& field, const RowSelection& sel = {0, 3, 1});

/// Every k x k minor (full) or seeded random column sets (sampled).
MdsCertificate certify_mds(const LinearCode& code, const CertifyMode& mode = CertifyMode::full());

struct StandardForm {
  LinearCode code;
  /// Column j of the standard generator is column permutation[j] of the original.
  std::vector<std::size_t> permutation;
};

StandardForm standard_form(const LinearCode& code);

[[nodiscard]] bool is_standard_form(const FieldMatrix& generator);

/// For a generator (I_k | A): MDS iff every j x j minor of A is nonzero for
/// j = 1..k. minors_checked counts the identity block as the j = 0 minor, so
/// a passing certificate reports C(n, k) like certify_mds. NotStandardForm if
/// the left block is not the identity.
MdsCertificate certify_mds_standard(const LinearCode& code, std::uint64_t budget = kDefaultMinorBudget);

/// Code generated by a check matrix; its own check matrix is the input generator.
LinearCode dual_code(const LinearCode& code);

/// Copy of `code` carrying a check matrix (the dual generator) if it had none.
LinearCode with_check(const LinearCode& code);

/// Same row space.
bool same_code(const LinearCode& a, const LinearCode& b);

}  // namespace fmds
