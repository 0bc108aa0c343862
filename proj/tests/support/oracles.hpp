#pragma once

// Reference implementations used only by tests. Nothing here touches the
// library's exp/log tables or elimination kernels: arithmetic is schoolbook
// polynomial arithmetic mod the field modulus and determinants are cofactor
// expansions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fmds/galois.hpp"
#include "fmds/matrix.hpp"

namespace fmds::oracle {

using Grid = std::vector<std::vector<std::uint32_t>>;

class PolyField {
 public:
  explicit PolyField(FieldSpec spec) : spec_(std::move(spec)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) q_ *= spec_.p;
  }

  [[nodiscard]] std::uint32_t q() const { return q_; }

  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % spec_.p;
    return pack(x);
  }

  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const {
    auto x = digits(a);
    for (auto& d : x) d = (spec_.p - d) % spec_.p;
    return pack(x);
  }

  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t p = spec_.p;
    const std::size_t m = spec_.m;
    const auto x = digits(a);
    const auto y = digits(b);
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    // Long division by the monic modulus, top degree down.
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
      const std::uint64_t c = prod[d];
      for (std::size_t i = 0; i <= m; ++i) {
        prod[d - m + i] = (prod[d - m + i] + (p - spec_.modulus[i]) * c) % p;
      }
      if (d == m) break;
    }
    std::vector<std::uint32_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Brute-force inverse: the b with a * b = 1.
  [[nodiscard]] std::optional<std::uint32_t> inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) return b;
    }
    return std::nullopt;
  }

 private:
  [[nodiscard]] std::vector<std::uint32_t> digits(std::uint32_t v) const {
    std::vector<std::uint32_t> out(spec_.m);
    for (auto& d : out) {
      d = v % spec_.p;
      v /= spec_.p;
    }
    return out;
  }
  [[nodiscard]] std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * spec_.p + d[i];
    return v;
  }

  FieldSpec spec_;
  std::uint32_t q_;
};

/// Extended Euclid inverse mod a prime.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
  }
  return ((s0 % p) + p) % p;
}

/// Laplace expansion along the first row.
inline std::uint32_t cofactor_det(const PolyField& f, const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::uint32_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::uint32_t> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const std::uint32_t term = f.mul(m[0][c], cofactor_det(f, minor));
    acc = (c % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

inline Grid to_grid(const FieldMatrix& m) {
  Grid g(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c).value;
  }
  return g;
}

inline Grid pick(const Grid& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Grid out;
  for (std::size_t r : rows) {
    std::vector<std::uint32_t> row;
    for (std::size_t c : cols) row.push_back(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

/// All strictly increasing k-subsets of [0, n), lexicographic, by recursion.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct MinorVerdict {
  bool all_nonzero = true;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> first_zero;
  std::uint64_t count = 0;
};

/// Every j x j minor by cofactor expansion, rows then columns lexicographic.
inline MinorVerdict brute_minors(const PolyField& f, const Grid& m, std::size_t j) {
  MinorVerdict v;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (const auto& rs : subsets(m.size(), j)) {
    for (const auto& cs : subsets(cols, j)) {
      ++v.count;
      if (cofactor_det(f, pick(m, rs, cs)) == 0) {
        v.all_nonzero = false;
        v.first_zero = {rs, cs};
        return v;
      }
    }
  }
  return v;
}

/// Rank as the size of the largest nonsingular minor.
inline std::size_t rank_by_minors(const PolyField& f, const Grid& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t j = std::min(m.size(), cols); j > 0; --j) {
    for (const auto& rs : subsets(m.size(), j)) {
      for (const auto& cs : subsets(cols, j)) {
        if (cofactor_det(f, pick(m, rs, cs)) != 0) return j;
      }
    }
  }
  return 0;
}

/// Minimum nonzero codeword weight by enumerating all q^k messages. Sums and
/// products come from tables filled with the schoolbook arithmetic above.
inline std::size_t min_distance(const PolyField& f, const Grid& g) {
  const std::size_t k = g.size();
  const std::size_t n = g[0].size();
  const std::uint32_t q = f.q();
  std::vector<std::uint32_t> add_table(std::size_t{q} * q);
  std::vector<std::uint32_t> mul_table(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      add_table[std::size_t{a} * q + b] = f.add(a, b);
      mul_table[std::size_t{a} * q + b] = f.mul(a, b);
    }
  }
  std::vector<std::uint32_t> msg(k, 0);
  std::size_t best = n + 1;
  for (;;) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == q) msg[i++] = 0;
    if (i == k) break;
    std::size_t weight = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::uint32_t s = 0;
      for (std::size_t r = 0; r < k; ++r) s = add_table[std::size_t{s} * q + mul_table[std::size_t{msg[r]} * q + g[r][c]]];
      weight += s != 0 ? 1 : 0;
    }
    best = std::min(best, weight);
  }
  return best;
}

/// Irreducibility of a monic modulus: no product of two monic polynomials of
/// positive degree equals it.
inline bool irreducible_by_products(const FieldSpec& spec) {
  const std::uint32_t p = spec.p;
  const std::size_t m = spec.m;
  auto monic = [&](std::size_t deg, std::uint64_t low) {
    std::vector<std::uint32_t> c(deg + 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      c[i] = static_cast<std::uint32_t>(low % p);
      low /= p;
    }
    c[deg] = 1;
    return c;
  };
  auto count = [&](std::size_t deg) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < deg; ++i) n *= p;
    return n;
  };
  for (std::size_t d1 = 1; d1 <= m / 2; ++d1) {
    const std::size_t d2 = m - d1;
    for (std::uint64_t a = 0; a < count(d1); ++a) {
      for (std::uint64_t b = 0; b < count(d2); ++b) {
        const auto x = monic(d1, a);
        const auto y = monic(d2, b);
        std::vector<std::uint64_t> prod(m + 1, 0);
        for (std::size_t i = 0; i <= d1; ++i) {
          for (std::size_t j = 0; j <= d2; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
        }
        bool equal = true;
        for (std::size_t i = 0; i <= m && equal; ++i) equal = prod[i] == spec.modulus[i];
        if (equal) return false;
      }
    }
  }
  return true;
}

}  // namespace fmds::oracle
