#include "fmds/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fmds {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients

Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  Poly out(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& coeffs, std::uint32_t p) {
  std::uint32_t value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
  return value;
}

// a * b mod (monic) modulus, all over GF(p). a, b have m coefficients.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = 2 * m; d-- > m;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    // x^d = x^(d-m) * x^m, and x^m = -(c0 + ... + c_{m-1} x^{m-1}).
    for (std::size_t i = 0; i < m; ++i) {
      prod[d - m + i] = (prod[d - m + i] + (p - modulus[i]) % p * c) % p;
    }
    prod[d] = 0;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m));
}

Poly powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  Poly result(m, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1u) result = mulmod(result, base, modulus, p);
    base = mulmod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_one(const Poly& a) {
  return a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](std::uint32_t c) { return c == 0; });
}

// True iff `element` has multiplicative order exactly q - 1 in GF(p)[x]/(modulus).
bool generates_units(const Poly& element, const Poly& modulus, std::uint32_t p, std::uint64_t q) {
  const std::uint64_t n = q - 1;
  if (!is_one(powmod(element, n, modulus, p))) return false;
  for (std::uint64_t r : prime_factors(n)) {
    if (is_one(powmod(element, n / r, modulus, p))) return false;
  }
  return true;
}

// Remainder of a by monic b over GF(p); both ascending, trailing zeros allowed.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t d = a.size(); d-- > db;) {
    const std::uint64_t c = a[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      a[d - db + i] = static_cast<std::uint32_t>((a[d - db + i] + (p - b[i]) % p * c) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool irreducible(const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly divisor = decode(static_cast<std::uint32_t>(low), p, static_cast<std::uint32_t>(deg));
      divisor.push_back(1);
      const Poly rem = poly_rem(modulus, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t m) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::OrderTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }
  return q;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const Poly modulus{0, 1};
  for (std::uint32_t g = 2; g < p; ++g) {
    if (generates_units(Poly{g}, modulus, p, p)) return g;
  }
  throw Error(Errc::NotPrime, std::to_string(p));  // unreachable for prime p
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  return static_cast<std::uint32_t>(checked_order(p, m));
}

std::string to_string(const FieldSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.p << " m=" << spec.m << " modulus=[";
  for (std::size_t i = 0; i < spec.modulus.size(); ++i) {
    if (i) os << ',';
    os << spec.modulus[i];
  }
  os << ']';
  return os.str();
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) noexcept {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (q % d != 0) ++d;
  std::uint32_t exponent = 0;
  std::uint64_t rest = q;
  while (rest % d == 0) {
    rest /= d;
    ++exponent;
  }
  if (rest != 1) return false;
  p = static_cast<std::uint32_t>(d);
  m = exponent;
  return true;
}

FieldPtr FieldContext::build(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t q = checked_order(p, m);

  FieldSpec spec{p, m, {}};
  if (m == 1) {
    const std::uint32_t g = smallest_primitive_root(p);
    spec.modulus = {(p - g) % p, 1};
    return std::make_shared<const FieldContext>(Token{}, std::move(spec), g);
  }

  const Poly x = decode(p, p, m);
  for (std::uint64_t low = 1; low < q; ++low) {
    if (low % p == 0) continue;  // x divides the modulus
    Poly modulus = decode(static_cast<std::uint32_t>(low), p, m);
    modulus.push_back(1);
    if (generates_units(x, modulus, p, q)) {
      spec.modulus = std::move(modulus);
      return std::make_shared<const FieldContext>(Token{}, std::move(spec), p);
    }
  }
  throw Error(Errc::NotIrreducible, "no primitive modulus found");  // unreachable
}

FieldPtr FieldContext::from_spec(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw Error(Errc::NotPrime, std::to_string(spec.p) + " is not prime");
  if (spec.m < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t q = checked_order(spec.p, spec.m);
  if (spec.modulus.size() != spec.m + 1 || spec.modulus.back() != 1) {
    throw Error(Errc::InvalidArgument, "modulus must be monic of degree m: " + to_string(spec));
  }
  if (std::any_of(spec.modulus.begin(), spec.modulus.end(), [&](std::uint32_t c) { return c >= spec.p; })) {
    throw Error(Errc::InvalidArgument, "modulus coefficient out of range: " + to_string(spec));
  }
  if (spec.m > 1 && !irreducible(spec.modulus, spec.p)) {
    throw Error(Errc::NotIrreducible, to_string(spec));
  }
  for (std::uint64_t v = 1; v < q; ++v) {
    if (generates_units(decode(static_cast<std::uint32_t>(v), spec.p, spec.m), spec.modulus, spec.p, q)) {
      return std::make_shared<const FieldContext>(Token{}, spec, static_cast<std::uint32_t>(v));
    }
  }
  throw Error(Errc::NotIrreducible, to_string(spec));
}

FieldPtr FieldContext::of_order(std::uint32_t q) {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  if (!prime_power(q, p, m)) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  return build(p, m);
}

FieldContext::FieldContext(Token, FieldSpec spec, std::uint32_t omega_value)
    : spec_(std::move(spec)), q_(static_cast<std::uint32_t>(checked_order(spec_.p, spec_.m))), omega_(omega_value) {
  const std::uint32_t p = spec_.p;
  const std::uint32_t m = spec_.m;
  const std::uint32_t n = q_ - 1;

  digit_weight_.resize(m);
  for (std::uint32_t i = 0, w = 1; i < m; ++i, w *= p) digit_weight_[i] = w;

  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  const Poly omega_poly = decode(omega_value, p, m);
  Poly power = decode(1, p, m);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t value = encode(power, p);
    if (value == 0 || seen[value]) throw Error(Errc::NotIrreducible, "omega is not primitive");
    seen[value] = true;
    exp_[i] = value;
    exp_[i + n] = value;
    log_[value] = i;
    power = mulmod(power, omega_poly, spec_.modulus, p);
  }

  neg_.resize(q_);
  for (std::uint32_t v = 0; v < q_; ++v) {
    Poly c = decode(v, p, m);
    for (auto& d : c) d = (p - d) % p;
    neg_[v] = encode(c, p);
  }
}

void FieldContext::check(FieldElement a) const {
  if (a.value >= q_) {
    throw Error(Errc::ContextMismatch,
                "element " + std::to_string(a.value) + " not in GF(" + std::to_string(q_) + ")");
  }
}

FieldElement FieldContext::element(std::uint64_t value) const {
  if (value >= q_) {
    throw Error(Errc::ContextMismatch, "element " + std::to_string(value) + " not in GF(" + std::to_string(q_) + ")");
  }
  return FieldElement{static_cast<std::uint32_t>(value)};
}

FieldElement FieldContext::from_integer(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(spec_.p);
  return FieldElement{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

std::uint32_t FieldContext::add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (p == 2) return a ^ b;
  if (spec_.m == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t out = 0;
  for (std::uint32_t w : digit_weight_) {
    const std::uint32_t s = (a % p) + (b % p);
    out += (s >= p ? s - p : s) * w;
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t FieldContext::sub_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  return add_raw(a, neg_[b]);
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{add_raw(a.value, b.value)};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{sub_raw(a.value, b.value)};
}

FieldElement FieldContext::neg(FieldElement a) const {
  check(a);
  return FieldElement{neg_[a.value]};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return FieldElement{mul_raw(a.value, b.value)};
}

FieldElement FieldContext::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return FieldElement{inv_raw(a.value)};
}

FieldElement FieldContext::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement FieldContext::pow(FieldElement a, std::int64_t e) const {
  check(a);
  if (a.value == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw Error(Errc::DivisionByZero, "negative power of zero");
  }
  const auto n = static_cast<std::int64_t>(q_ - 1);
  const std::int64_t reduced = ((e % n) + n) % n;
  const std::uint64_t exponent = (std::uint64_t{log_[a.value]} * static_cast<std::uint64_t>(reduced)) % static_cast<std::uint64_t>(n);
  return FieldElement{exp_[exponent]};
}

FieldElement FieldContext::exp(std::int64_t i) const noexcept {
  const auto n = static_cast<std::int64_t>(q_ - 1);
  return FieldElement{exp_[static_cast<std::size_t>(((i % n) + n) % n)]};
}

std::uint32_t FieldContext::log(FieldElement a) const {
  check(a);
  if (a.value == 0) throw Error(Errc::InvalidArgument, "log of zero");
  return log_[a.value];
}

std::uint32_t FieldContext::order_of(FieldElement a) const {
  const std::uint32_t l = log(a);
  const std::uint32_t n = q_ - 1;
  return n / std::gcd(n, l);
}

}  // namespace fmds
