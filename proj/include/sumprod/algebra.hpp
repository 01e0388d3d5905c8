// Copyright 2026 The sumprod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic in F_p, F_{p^r} and Z_m, additive characters of the
// plane over those rings, and the divisor-type arithmetic functions.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {

enum class RingKind { PrimeField, ExtensionField, ModularRing };

constexpr std::string_view to_string(RingKind kind) noexcept {
  switch (kind) {
    case RingKind::PrimeField: return "prime-field";
    case RingKind::ExtensionField: return "extension-field";
    case RingKind::ModularRing: return "modular-ring";
  }
  return "unknown";
}

/// Canonical ring element. For Z_m and F_p the value is the residue in
/// [0, order). For F_{p^r} it packs the coefficient vector (c_0, ..., c_{r-1})
/// of the polynomial basis in base p: value = c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
struct Elem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// Element of the plane H = R^2.
struct Point {
  Elem x1;
  Elem x2;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

using Complex = std::complex<double>;
using CharacterValue = Complex;

inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
inline constexpr unsigned kMaxExtensionDegree = 4;

namespace detail {

constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

constexpr std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inverse of a modulo m, if gcd(a, m) == 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) noexcept {
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t inv = old_s % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(inv);
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
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

// Dense polynomials over F_p, coefficients low to high.
using PolyFp = std::vector<std::uint32_t>;

inline void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
inline PolyFp poly_rem(PolyFp f, const PolyFp& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = lead * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

// Exhaustive factor search: no monic factor of degree 1..deg/2 divides f.
inline bool is_irreducible(const PolyFp& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
      PolyFp g(d + 1, 0);
      std::uint64_t t = tail;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree r, ordered by the packed tail
// c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
inline PolyFp smallest_irreducible(std::uint32_t p, unsigned r) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < r; ++i) count *= p;
  for (std::uint64_t tail = 0; tail < count; ++tail) {
    PolyFp f(r + 1, 0);
    std::uint64_t t = tail;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[r] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

struct RingTables {
  RingKind kind = RingKind::PrimeField;
  std::uint32_t p = 0;  // characteristic for fields, modulus for Z_m
  unsigned r = 1;
  std::uint32_t order = 0;
  PolyFp irreducible;  // extension fields only, monic, length r + 1
  std::vector<std::uint32_t> digit_weight;  // p^i
  // Extension fields: discrete log / exponential tables w.r.t. a primitive element.
  std::vector<std::uint32_t> exp_table;  // length 2 (q - 1)
  std::vector<std::uint32_t> log_table;  // length q, log_table[0] unused
  std::vector<std::uint32_t> trace_table;
  std::vector<std::uint32_t> dual_table;
  // e^{2 pi i k / base}, base = p (fields) or m (Z_m)
  std::vector<Complex> roots;
};

inline std::uint32_t ext_slow_mul(const RingTables& t, std::uint32_t a, std::uint32_t b) {
  PolyFp fa(t.r), fb(t.r);
  for (unsigned i = 0; i < t.r; ++i) {
    fa[i] = a % t.p;
    a /= t.p;
    fb[i] = b % t.p;
    b /= t.p;
  }
  PolyFp prod(2 * t.r - 1, 0);
  for (unsigned i = 0; i < t.r; ++i) {
    for (unsigned j = 0; j < t.r; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % t.p);
    }
  }
  const PolyFp rem = poly_rem(prod, t.irreducible, t.p);
  std::uint32_t out = 0;
  for (std::size_t i = rem.size(); i-- > 0;) out = out * t.p + rem[i];
  return out;
}

inline std::uint32_t ext_slow_pow(const RingTables& t, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = ext_slow_mul(t, result, a);
    a = ext_slow_mul(t, a, a);
    e >>= 1;
  }
  return result;
}

inline std::uint32_t digit_add(const RingTables& t, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < t.r; ++i) {
    const std::uint32_t s = (a % t.p + b % t.p) % t.p;
    out += s * t.digit_weight[i];
    a /= t.p;
    b /= t.p;
  }
  return out;
}

inline void build_extension_tables(RingTables& t) {
  const std::uint32_t q = t.order;
  const std::uint64_t group = q - 1;
  const auto factors = distinct_prime_factors(group);
  std::uint32_t generator = 0;
  for (std::uint32_t g = 2; g < q && generator == 0; ++g) {
    bool primitive = true;
    for (const auto l : factors) {
      if (ext_slow_pow(t, g, group / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = g;
  }
  if (q == 2) generator = 1;
  if (generator == 0) fail(ErrorCode::InvalidArgument, "no primitive element (reducible modulus?)");

  t.exp_table.assign(2 * group, 0);
  t.log_table.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    t.exp_table[i] = x;
    t.exp_table[i + group] = x;
    t.log_table[x] = static_cast<std::uint32_t>(i);
    x = ext_slow_mul(t, x, generator);
  }

  // Trace(z) = z + z^p + ... + z^{p^{r-1}}, computed through the log table.
  t.trace_table.assign(q, 0);
  for (std::uint32_t z = 1; z < q; ++z) {
    std::uint32_t acc = 0;
    std::uint64_t e = t.log_table[z];
    for (unsigned i = 0; i < t.r; ++i) {
      acc = digit_add(t, acc, t.exp_table[e % group]);
      e = e * t.p % group;
    }
    if (acc >= t.p) fail(ErrorCode::TheoremViolation, "trace left the prime subfield");
    t.trace_table[z] = acc;
  }

  // dual(e) has coordinates (Tr(e t^j))_j, so Tr(e x) = sum_j dual(e)_j x_j.
  t.dual_table.assign(q, 0);
  for (std::uint32_t e = 1; e < q; ++e) {
    std::uint32_t out = 0;
    for (unsigned j = 0; j < t.r; ++j) {
      const std::uint32_t prod = ext_slow_mul(t, e, t.digit_weight[j]);
      out += t.trace_table[prod] * t.digit_weight[j];
    }
    t.dual_table[e] = out;
  }
}

inline void build_roots(RingTables& t) {
  t.roots.resize(t.p);
  for (std::uint32_t k = 0; k < t.p; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(t.p);
    t.roots[k] = Complex(std::cos(angle), std::sin(angle));
  }
}

}  // namespace detail

/// Coefficient ring: F_p, F_{p^r} or Z_m. Cheap to copy; the lookup tables
/// are shared and immutable.
class RingCtx {
 public:
  static RingCtx prime_field(std::uint64_t p) {
    if (!detail::is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    check_order(p);
    auto t = std::make_shared<detail::RingTables>();
    t->kind = RingKind::PrimeField;
    t->p = static_cast<std::uint32_t>(p);
    t->order = t->p;
    t->digit_weight = {1};
    detail::build_roots(*t);
    return RingCtx(std::move(t));
  }

  /// F_{p^r}. Without an explicit modulus the lexicographically smallest
  /// monic irreducible of degree r is used. `irreducible` lists c_0..c_r.
  static RingCtx extension_field(std::uint64_t p, unsigned r,
                                 std::optional<std::vector<std::uint32_t>> irreducible = std::nullopt) {
    if (r == 1 && !irreducible) return prime_field(p);
    if (!detail::is_prime(p)) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    if (r < 1 || r > kMaxExtensionDegree) {
      fail(ErrorCode::InvalidArgument, "extension degree must be in [1, 4]");
    }
    std::uint64_t order = 1;
    for (unsigned i = 0; i < r; ++i) {
      order *= p;
      check_order(order);
    }
    auto t = std::make_shared<detail::RingTables>();
    t->kind = RingKind::ExtensionField;
    t->p = static_cast<std::uint32_t>(p);
    t->r = r;
    t->order = static_cast<std::uint32_t>(order);
    t->digit_weight.resize(r);
    std::uint32_t w = 1;
    for (unsigned i = 0; i < r; ++i, w *= t->p) t->digit_weight[i] = w;
    if (irreducible) {
      auto f = *irreducible;
      if (f.size() != r + 1 || f.back() != 1) {
        fail(ErrorCode::InvalidArgument, "modulus must be monic of degree r (give c_0..c_r)");
      }
      for (auto& c : f) {
        if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
      }
      if (!detail::is_irreducible(f, t->p)) fail(ErrorCode::InvalidArgument, "modulus is reducible");
      t->irreducible = std::move(f);
    } else {
      t->irreducible = detail::smallest_irreducible(t->p, r);
    }
    if (r == 1) {
      // Degree-one modulus: still F_p, but keep the prime-field fast path.
      t->kind = RingKind::PrimeField;
      t->irreducible.clear();
    } else {
      detail::build_extension_tables(*t);
    }
    detail::build_roots(*t);
    return RingCtx(std::move(t));
  }

  static RingCtx modular(std::uint64_t m) {
    if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be at least 2");
    check_order(m);
    auto t = std::make_shared<detail::RingTables>();
    t->kind = RingKind::ModularRing;
    t->p = static_cast<std::uint32_t>(m);
    t->order = t->p;
    t->digit_weight = {1};
    detail::build_roots(*t);
    return RingCtx(std::move(t));
  }

  RingKind kind() const noexcept { return t_->kind; }
  bool is_field() const noexcept { return t_->kind != RingKind::ModularRing; }
  /// p for fields, m for Z_m; also the denominator of every character exponent.
  std::uint32_t characteristic() const noexcept { return t_->p; }
  std::uint32_t modulus() const noexcept { return t_->p; }
  unsigned degree() const noexcept { return t_->r; }
  std::uint32_t order() const noexcept { return t_->order; }
  const std::vector<std::uint32_t>& irreducible() const noexcept { return t_->irreducible; }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }

  Elem element(std::uint64_t index) const {
    if (index >= t_->order) fail(ErrorCode::InvalidArgument, "element index out of range");
    return Elem{static_cast<std::uint32_t>(index)};
  }

  /// Image of an integer under Z -> ring.
  Elem from_int(std::int64_t n) const noexcept {
    const auto c = static_cast<std::int64_t>(t_->p);
    std::int64_t v = n % c;
    if (v < 0) v += c;
    return Elem{static_cast<std::uint32_t>(v)};
  }

  std::vector<std::uint32_t> coordinates(Elem a) const {
    std::vector<std::uint32_t> out(t_->r);
    std::uint32_t v = a.value;
    for (unsigned i = 0; i < t_->r; ++i) {
      out[i] = v % t_->p;
      v /= t_->p;
    }
    return out;
  }

  Elem add(Elem a, Elem b) const noexcept {
    if (t_->kind == RingKind::ExtensionField) return Elem{detail::digit_add(*t_, a.value, b.value)};
    const std::uint32_t s = a.value + b.value;
    return Elem{s >= t_->p ? s - t_->p : s};
  }

  Elem neg(Elem a) const noexcept {
    if (t_->kind == RingKind::ExtensionField) {
      std::uint32_t out = 0;
      std::uint32_t v = a.value;
      for (unsigned i = 0; i < t_->r; ++i) {
        const std::uint32_t d = v % t_->p;
        out += (d == 0 ? 0 : t_->p - d) * t_->digit_weight[i];
        v /= t_->p;
      }
      return Elem{out};
    }
    return Elem{a.value == 0 ? 0 : t_->p - a.value};
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (t_->kind == RingKind::ExtensionField) {
      if (a.value == 0 || b.value == 0) return Elem{0};
      return Elem{t_->exp_table[t_->log_table[a.value] + t_->log_table[b.value]]};
    }
    return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % t_->p)};
  }

  bool is_unit(Elem a) const noexcept {
    if (t_->kind == RingKind::ModularRing) return detail::gcd(a.value, t_->p) == 1;
    return a.value != 0;
  }

  Elem inv(Elem a) const {
    if (!is_unit(a)) {
      fail(ErrorCode::NotAUnit, to_string(a) + " is not invertible in " + describe());
    }
    if (t_->kind == RingKind::ExtensionField) {
      const std::uint32_t group = t_->order - 1;
      return Elem{t_->exp_table[(group - t_->log_table[a.value]) % group]};
    }
    return Elem{static_cast<std::uint32_t>(*detail::inverse_mod(a.value, t_->p))};
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Absolute trace to the prime subfield, returned as an element of F_p
  /// (its value is the residue in [0, p)).
  Elem trace(Elem z) const {
    switch (t_->kind) {
      case RingKind::ModularRing:
        fail(ErrorCode::WrongKind, "trace is defined for fields only");
      case RingKind::PrimeField:
        return z;
      case RingKind::ExtensionField:
        return Elem{t_->trace_table[z.value]};
    }
    return z;
  }

  /// Element whose coordinates are (Tr(e t^j))_j. Identity outside
  /// extension fields.
  Elem trace_dual(Elem e) const noexcept {
    if (t_->kind != RingKind::ExtensionField) return e;
    return Elem{t_->dual_table[e.value]};
  }

  /// k such that chi_xi(x) = exp(2 pi i k / characteristic()).
  std::uint32_t character_exponent(Point xi, Point x) const noexcept {
    const Elem dot = add(mul(xi.x1, x.x1), mul(xi.x2, x.x2));
    if (t_->kind == RingKind::ExtensionField) return t_->trace_table[dot.value];
    return dot.value;
  }

  /// exp(2 pi i k / characteristic()), k reduced modulo the characteristic.
  const Complex& root_of_unity(std::uint64_t k) const noexcept { return t_->roots[k % t_->p]; }

  CharacterValue character(Point xi, Point x) const noexcept {
    return t_->roots[character_exponent(xi, x)];
  }

  std::string to_string(Elem a) const {
    if (t_->kind != RingKind::ExtensionField) return std::to_string(a.value);
    const auto c = coordinates(a);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || c[i] != 1) os << c[i];
      if (i > 0 && c[i] != 1) os << '*';
      if (i >= 1) os << 't';
      if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
  }

  std::string describe() const {
    std::ostringstream os;
    switch (t_->kind) {
      case RingKind::PrimeField: os << "F_" << t_->p; break;
      case RingKind::ExtensionField: os << "F_" << t_->p << '^' << t_->r; break;
      case RingKind::ModularRing: os << "Z_" << t_->p; break;
    }
    return os.str();
  }

  friend bool operator==(const RingCtx& a, const RingCtx& b) noexcept {
    return a.t_ == b.t_ || (a.t_->kind == b.t_->kind && a.t_->p == b.t_->p && a.t_->r == b.t_->r &&
                            a.t_->irreducible == b.t_->irreducible);
  }

 private:
  explicit RingCtx(std::shared_ptr<const detail::RingTables> t) : t_(std::move(t)) {}

  static void check_order(std::uint64_t order) {
    if (order > kMaxOrder) fail(ErrorCode::TooLarge, "ring order exceeds 2^20");
  }

  std::shared_ptr<const detail::RingTables> t_;
};

/// Parses "p" or "p^r" into a field context.
inline RingCtx parse_field(const std::string& text) {
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    const auto p = std::stoull(text.substr(0, caret), &used);
    if (used != text.substr(0, caret).size()) throw std::invalid_argument("trailing characters");
    unsigned r = 1;
    if (caret != std::string::npos) {
      const auto tail = text.substr(caret + 1);
      r = static_cast<unsigned>(std::stoul(tail, &used));
      if (used != tail.size()) throw std::invalid_argument("trailing characters");
    }
    if (detail::is_prime(p)) return RingCtx::extension_field(p, r);
    if (caret == std::string::npos) {
      // Accept a bare prime power such as 9.
      for (std::uint64_t base = 2; base * base <= p; ++base) {
        if (!detail::is_prime(base)) continue;
        std::uint64_t v = base;
        unsigned e = 1;
        while (v < p) {
          v *= base;
          ++e;
        }
        if (v == p) return RingCtx::extension_field(base, e);
      }
    }
  } catch (const std::logic_error&) {
    fail(ErrorCode::InvalidArgument, "malformed field '" + text + "'");
  }
  fail(ErrorCode::InvalidArgument, "'" + text + "' is not a prime power");
}

// ---------------------------------------------------------------------------
// Arithmetic functions of the modulus.

inline std::uint64_t divisor_count(std::uint64_t m) {
  std::uint64_t count = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    count *= e + 1;
  }
  if (m > 1) count *= 2;
  return count;
}

/// Smallest prime divisor; 1 for m = 1.
inline std::uint64_t smallest_prime_factor(std::uint64_t m) {
  if (m <= 1) return 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return d;
  }
  return m;
}

/// Nonempty products of distinct prime divisors, ascending.
inline std::vector<std::uint64_t> omega_set(std::uint64_t m) {
  const auto primes = detail::distinct_prime_factors(m);
  std::vector<std::uint64_t> out;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) d *= primes[i];
    }
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline std::uint64_t g_memo(std::uint64_t m, std::map<std::uint64_t, std::uint64_t>& memo) {
  if (m == 1) return 0;
  if (const auto it = memo.find(m); it != memo.end()) return it->second;
  std::uint64_t value = divisor_count(m);
  for (const auto d : omega_set(m)) value += g_memo(m / d, memo);
  memo.emplace(m, value);
  return value;
}
}  // namespace detail

/// g(1) = 0, g(m) = tau(m) + sum over d in Omega(m) of g(m / d).
inline std::uint64_t g_recursive(std::uint64_t m) {
  if (m < 1 || m > kMaxOrder) fail(ErrorCode::InvalidArgument, "m must be in [1, 2^20]");
  std::map<std::uint64_t, std::uint64_t> memo;
  return detail::g_memo(m, memo);
}

/// sum over n | m of tau(m) tau(m / n). Diagnostic only: it disagrees with
/// g_recursive (already at m = p) and is not used by any bound.
inline std::uint64_t g_closed_form(std::uint64_t m) {
  const std::uint64_t tau = divisor_count(m);
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= m; ++n) {
    if (m % n == 0) total += tau * divisor_count(m / n);
  }
  return total;
}

struct ArithmeticFunctions {
  std::uint64_t tau = 0;
  std::uint64_t gamma = 0;
  std::vector<std::uint64_t> omega;
  std::uint64_t g = 0;
};

inline ArithmeticFunctions arith_functions(std::uint64_t m) {
  if (m < 1 || m > kMaxOrder) fail(ErrorCode::InvalidArgument, "m must be in [1, 2^20]");
  return ArithmeticFunctions{divisor_count(m), smallest_prime_factor(m), omega_set(m), g_recursive(m)};
}

}  // namespace sumprod
