#pragma once

// Exact arithmetic in GF(p^m) backed by exp/log tables.
//
// Elements are integers in [0, q) that pack polynomial coefficients base p:
// value = c0 + c1*p + ... + c_{m-1}*p^{m-1}. A field built with
// FieldContext::build(p, m) uses the monic degree-m modulus with the smallest
// such encoding for which x generates the multiplicative group, so the
// primitive element is omega = x (encoding p). For m = 1 omega is the
// smallest primitive root mod p.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fmds/error.hpp"

namespace fmds {

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  /// m + 1 coefficients in [0, p), ascending degree, monic.
  std::vector<std::uint32_t> modulus;

  [[nodiscard]] std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

/// `p=<int> m=<int> modulus=[c0,...,cm]`
std::string to_string(const FieldSpec& spec);

struct FieldElement {
  std::uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(v) {}
  constexpr auto operator<=>(const FieldElement&) const = default;
};

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

class FieldContext {
 public:
  /// Canonical field for (p, m). Throws NotPrime, OrderTooLarge, InvalidArgument.
  static FieldPtr build(std::uint32_t p, std::uint32_t m);

  /// Field for an explicit modulus; omega is the smallest-encoding element of
  /// order q - 1. Throws NotIrreducible if the modulus does not define a field.
  static FieldPtr from_spec(const FieldSpec& spec);

  /// Field of order q (a prime power), canonical modulus.
  static FieldPtr of_order(std::uint32_t q);

  [[nodiscard]] const FieldSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::uint32_t p() const noexcept { return spec_.p; }
  [[nodiscard]] std::uint32_t m() const noexcept { return spec_.m; }
  [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
  [[nodiscard]] FieldElement omega() const noexcept { return omega_; }

  [[nodiscard]] bool contains(FieldElement a) const noexcept { return a.value < q_; }
  /// Validated element from its encoding; ContextMismatch when value >= q.
  [[nodiscard]] FieldElement element(std::uint64_t value) const;
  /// Image of an integer under Z -> GF(p).
  [[nodiscard]] FieldElement from_integer(std::int64_t n) const noexcept;

  [[nodiscard]] FieldElement zero() const noexcept { return FieldElement{0}; }
  [[nodiscard]] FieldElement one() const noexcept { return FieldElement{1}; }

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement neg(FieldElement a) const;
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const;
  [[nodiscard]] FieldElement inv(FieldElement a) const;
  /// Negative exponents are powers of the inverse; pow(0, 0) = 1.
  [[nodiscard]] FieldElement pow(FieldElement a, std::int64_t e) const;

  /// omega^i, i taken mod q - 1.
  [[nodiscard]] FieldElement exp(std::int64_t i) const noexcept;
  /// Discrete log base omega of a nonzero element, in [0, q - 1).
  [[nodiscard]] std::uint32_t log(FieldElement a) const;

  /// Multiplicative order of a nonzero element.
  [[nodiscard]] std::uint32_t order_of(FieldElement a) const;

  /// Table views. exp_table has q - 1 entries, log_table has q (entry 0 unused).
  [[nodiscard]] std::span<const std::uint32_t> exp_table() const noexcept {
    return {exp_.data(), q_ - 1};
  }
  [[nodiscard]] std::span<const std::uint32_t> log_table() const noexcept { return log_; }

  /// Same field description (modulus included).
  [[nodiscard]] bool same_field(const FieldContext& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  // Unchecked kernels for inner loops; callers guarantee operands are in range.
  [[nodiscard]] std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept;
  [[nodiscard]] std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const noexcept;
  [[nodiscard]] std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  [[nodiscard]] std::uint32_t inv_raw(std::uint32_t a) const noexcept {
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

 private:
  struct Token {};

 public:
  FieldContext(Token, FieldSpec spec, std::uint32_t omega_value);

 private:
  void check(FieldElement a) const;

  FieldSpec spec_;
  std::uint32_t q_;
  FieldElement omega_;
  // 2(q-1) entries so log a + log b needs no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> digit_weight_;  // p^i, i < m
};

bool is_prime(std::uint64_t n) noexcept;

/// Splits q into (p, m) with q = p^m; returns false if q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) noexcept;

}  // namespace fmds
