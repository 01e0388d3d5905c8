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

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sumprod/algebra.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

/// Exponent pair (i, j) of the monomial x1^i x2^j.
using Exponent = std::pair<unsigned, unsigned>;

inline constexpr std::uint64_t kMaxPlaneSize = std::uint64_t{1} << 24;

/// Univariate polynomial, coefficients from the constant term upwards.
class UniPoly {
 public:
  explicit UniPoly(RingCtx ctx, std::vector<Elem> coefficients = {})
      : ctx_(std::move(ctx)), coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == ctx_.zero()) coeffs_.pop_back();
  }

  const RingCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Elem coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : ctx_.zero(); }

  Elem operator()(Elem z) const noexcept {
    Elem acc = ctx_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = ctx_.add(ctx_.mul(acc, z), coeffs_[i]);
    return acc;
  }

  std::string to_string(const std::string& var = "z") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] == ctx_.zero()) continue;
      if (!first) os << " + ";
      first = false;
      const bool unit_coeff = coeffs_[i] == ctx_.one();
      if (!unit_coeff || i == 0) os << ctx_.to_string(coeffs_[i]);
      if (i > 0) {
        if (!unit_coeff) os << '*';
        os << var;
        if (i > 1) os << '^' << i;
      }
    }
    return os.str();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  RingCtx ctx_;
  std::vector<Elem> coeffs_;
};

/// alpha x1 + beta x2 + offset.
struct LinearForm {
  RingCtx ctx;
  Elem alpha;
  Elem beta;
  Elem offset{};

  Elem operator()(Point x) const noexcept {
    return ctx.add(ctx.add(ctx.mul(alpha, x.x1), ctx.mul(beta, x.x2)), offset);
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](Elem c, const char* var) {
      if (c == ctx.zero()) return;
      if (!first) os << " + ";
      first = false;
      if (c != ctx.one() || var == nullptr) os << ctx.to_string(c);
      if (var != nullptr) {
        if (c != ctx.one()) os << '*';
        os << var;
      }
    };
    emit(alpha, "x1");
    emit(beta, "x2");
    emit(offset, nullptr);
    if (first) os << '0';
    return os.str();
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) noexcept {
    return a.alpha == b.alpha && a.beta == b.beta && a.offset == b.offset;
  }
};

/// Sparse bivariate polynomial over a RingCtx. No zero coefficients are stored.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, Elem>;

  explicit BiPoly(RingCtx ctx) : ctx_(std::move(ctx)) {}

  static BiPoly constant(const RingCtx& ctx, Elem c) { return monomial(ctx, c, 0, 0); }
  static BiPoly x1(const RingCtx& ctx) { return monomial(ctx, ctx.one(), 1, 0); }
  static BiPoly x2(const RingCtx& ctx) { return monomial(ctx, ctx.one(), 0, 1); }

  static BiPoly monomial(const RingCtx& ctx, Elem c, unsigned i, unsigned j) {
    BiPoly out(ctx);
    out.add_term({i, j}, c);
    return out;
  }

  static BiPoly linear(const LinearForm& l) {
    BiPoly out(l.ctx);
    out.add_term({1, 0}, l.alpha);
    out.add_term({0, 1}, l.beta);
    out.add_term({0, 0}, l.offset);
    return out;
  }

  const RingCtx& ctx() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
  }

  /// Total degree; 0 for constants (including the zero polynomial).
  unsigned degree() const noexcept {
    unsigned k = 0;
    for (const auto& [e, c] : terms_) k = std::max(k, e.first + e.second);
    return k;
  }

  Elem coefficient(unsigned i, unsigned j) const noexcept {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? ctx_.zero() : it->second;
  }

  void add_term(Exponent e, Elem c) {
    if (c == ctx_.zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = ctx_.add(it->second, c);
      if (it->second == ctx_.zero()) terms_.erase(it);
    }
  }

  BiPoly operator-() const {
    BiPoly out(ctx_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, ctx_.neg(c));
    return out;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend BiPoly operator-(BiPoly a, const BiPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, a.ctx_.neg(c));
    return a;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out(a.ctx_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea.first + eb.first, ea.second + eb.second}, a.ctx_.mul(ca, cb));
      }
    }
    return out;
  }

  BiPoly scaled(Elem s) const {
    BiPoly out(ctx_);
    for (const auto& [e, c] : terms_) out.add_term(e, ctx_.mul(c, s));
    return out;
  }

  BiPoly pow(unsigned e) const {
    BiPoly result = constant(ctx_, ctx_.one());
    BiPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// P - a.
  BiPoly minus_constant(Elem a) const {
    BiPoly out = *this;
    out.add_term({0, 0}, ctx_.neg(a));
    return out;
  }

  Elem operator()(Point x) const noexcept {
    Elem acc = ctx_.zero();
    for (const auto& [e, c] : terms_) {
      acc = ctx_.add(acc, ctx_.mul(c, ctx_.mul(ctx_.pow(x.x1, e.first), ctx_.pow(x.x2, e.second))));
    }
    return acc;
  }

  /// Coefficients c_j(x1) of x2^j, as polynomials in x1: result[j][i] is the
  /// coefficient of x1^i x2^j.
  std::vector<std::vector<Elem>> by_x2_degree() const {
    unsigned max_i = 0, max_j = 0;
    for (const auto& [e, c] : terms_) {
      max_i = std::max(max_i, e.first);
      max_j = std::max(max_j, e.second);
    }
    std::vector<std::vector<Elem>> out(max_j + 1, std::vector<Elem>(max_i + 1, ctx_.zero()));
    for (const auto& [e, c] : terms_) out[e.second][e.first] = c;
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first.
    std::vector<std::pair<Exponent, Elem>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first.first + a.first.second > b.first.first + b.first.second;
    });
    for (const auto& [e, c] : sorted) {
      if (!first) os << " + ";
      first = false;
      const bool bare = e.first + e.second > 0 && c == ctx_.one();
      if (!bare) os << ctx_.to_string(c);
      auto var = [&](const char* name, unsigned power, bool need_star) {
        if (power == 0) return;
        if (need_star) os << '*';
        os << name;
        if (power > 1) os << '^' << power;
      };
      var("x1", e.first, !bare);
      var("x2", e.second, !bare || e.first > 0);
    }
    return os.str();
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  RingCtx ctx_;
  TermMap terms_;
};

/// P(a11 u + a12 v, a21 u + a22 v) as a polynomial in (u, v), stored with
/// u in the x1 slot and v in the x2 slot.
inline BiPoly substitute_linear(const BiPoly& p, Elem a11, Elem a12, Elem a21, Elem a22) {
  const RingCtx& ctx = p.ctx();
  unsigned max_i = 0, max_j = 0;
  for (const auto& [e, c] : p.terms()) {
    max_i = std::max(max_i, e.first);
    max_j = std::max(max_j, e.second);
  }
  const BiPoly first = BiPoly::linear({ctx, a11, a12, ctx.zero()});
  const BiPoly second = BiPoly::linear({ctx, a21, a22, ctx.zero()});
  std::vector<BiPoly> first_pows{BiPoly::constant(ctx, ctx.one())};
  std::vector<BiPoly> second_pows{BiPoly::constant(ctx, ctx.one())};
  for (unsigned i = 1; i <= max_i; ++i) first_pows.push_back(first_pows.back() * first);
  for (unsigned j = 1; j <= max_j; ++j) second_pows.push_back(second_pows.back() * second);
  BiPoly out(ctx);
  for (const auto& [e, c] : p.terms()) out = out + (first_pows[e.first] * second_pows[e.second]).scaled(c);
  return out;
}

/// Q(L) expanded.
inline BiPoly compose(const UniPoly& q, const LinearForm& l) {
  const RingCtx& ctx = q.ctx();
  const BiPoly lin = BiPoly::linear(l);
  BiPoly out(ctx);
  BiPoly power = BiPoly::constant(ctx, ctx.one());
  for (std::size_t i = 0; i < q.coefficients().size(); ++i) {
    out = out + power.scaled(q.coefficient(i));
    if (i + 1 < q.coefficients().size()) power = power * lin;
  }
  return out;
}

namespace detail {

inline void require_field(const RingCtx& ctx, const char* what) {
  if (!ctx.is_field()) fail(ErrorCode::WrongKind, std::string(what) + " requires a field");
}

inline void require_degree_below_order(const BiPoly& p) {
  if (p.degree() >= p.ctx().order()) {
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(p.degree()) + " must be below the ring order");
  }
}

// A direction (alpha : beta) of the projective line, normalized so the first
// nonzero coordinate is 1. Enumerated as (1, 0), (1, 1), ..., (1, q-1), (0, 1).
struct Direction {
  Elem alpha;
  Elem beta;
};

inline std::vector<Direction> projective_directions(const RingCtx& ctx) {
  std::vector<Direction> out;
  out.reserve(ctx.order() + 1);
  for (std::uint32_t b = 0; b < ctx.order(); ++b) out.push_back({ctx.one(), Elem{b}});
  out.push_back({ctx.zero(), ctx.one()});
  return out;
}

// P rewritten in coordinates u = alpha x1 + beta x2 (x1 slot) and a
// complementary v (x2 slot).
inline BiPoly rewrite_along(const BiPoly& p, Direction dir) {
  const RingCtx& ctx = p.ctx();
  if (dir.alpha == ctx.one()) {
    // x1 = u - beta v, x2 = v
    return substitute_linear(p, ctx.one(), ctx.neg(dir.beta), ctx.zero(), ctx.one());
  }
  // u = x2: x1 = v, x2 = u
  return substitute_linear(p, ctx.zero(), ctx.one(), ctx.one(), ctx.zero());
}

}  // namespace detail

struct Decomposition {
  UniPoly q;
  LinearForm l;
};

/// Either P = Q(L) for a homogeneous normalized L, or no such form exists.
struct DegeneracyResult {
  std::optional<Decomposition> decomposition;

  bool degenerate() const noexcept { return decomposition.has_value(); }
};

/// Decides whether P = Q(L) for a univariate Q and a linear form L, by
/// rewriting P along every projective direction. Among valid directions the
/// first in enumeration order is returned.
inline DegeneracyResult degeneracy_test(const BiPoly& p) {
  const RingCtx& ctx = p.ctx();
  detail::require_field(ctx, "degeneracy_test");
  if (p.is_constant()) fail(ErrorCode::ConstantPolynomial, "degeneracy is undefined for constants");
  // The rewrite is a symbolic identity, so no degree bound is needed here.

  for (const auto dir : detail::projective_directions(ctx)) {
    const BiPoly rewritten = detail::rewrite_along(p, dir);
    const bool depends_on_v = std::any_of(rewritten.terms().begin(), rewritten.terms().end(),
                                          [](const auto& t) { return t.first.second > 0; });
    if (depends_on_v) continue;
    std::vector<Elem> coeffs(rewritten.degree() + 1, ctx.zero());
    for (const auto& [e, c] : rewritten.terms()) coeffs[e.first] = c;
    Decomposition d{UniPoly(ctx, std::move(coeffs)), LinearForm{ctx, dir.alpha, dir.beta, ctx.zero()}};
    if (compose(d.q, d.l) != p) {
      fail(ErrorCode::TheoremViolation, "Q(L) expansion does not reproduce P");
    }
    return {std::move(d)};
  }
  return {};
}

/// A line on which P is symbolically constant: P restricted to
/// {line(x) = 0} is the constant `value`.
struct ConstantLine {
  LinearForm line;
  Elem value;
};

/// Every affine line (normalized direction, offset) on which P is constant,
/// in enumeration order. P - a has the linear factor `line` exactly when the
/// reported value equals a.
inline std::vector<ConstantLine> constant_lines(const BiPoly& p) {
  const RingCtx& ctx = p.ctx();
  detail::require_field(ctx, "linear factor search");
  detail::require_degree_below_order(p);
  std::vector<ConstantLine> out;
  for (const auto dir : detail::projective_directions(ctx)) {
    // Along u = c the restriction is sum_j (sum_i r_ij c^i) v^j.
    std::vector<UniPoly> rows;
    for (auto& r : detail::rewrite_along(p, dir).by_x2_degree()) rows.emplace_back(ctx, std::move(r));
    for (std::uint32_t cv = 0; cv < ctx.order(); ++cv) {
      const Elem c{cv};
      bool constant = true;
      for (std::size_t j = 1; j < rows.size() && constant; ++j) constant = rows[j](c) == ctx.zero();
      if (!constant) continue;
      const Elem value = rows.empty() ? ctx.zero() : rows[0](c);
      out.push_back({LinearForm{ctx, dir.alpha, dir.beta, ctx.neg(c)}, value});
    }
  }
  return out;
}

/// First linear factor (in enumeration order), if any.
inline std::optional<LinearForm> has_linear_factor(const BiPoly& p) {
  for (const auto& line : constant_lines(p)) {
    if (line.value == p.ctx().zero()) return line.line;
  }
  return std::nullopt;
}

/// {a : P - a has a linear factor}, ascending. At most deg(P) - 1 elements
/// for non-degenerate P.
inline std::vector<Elem> bad_set(const BiPoly& p) {
  if (degeneracy_test(p).degenerate()) {
    fail(ErrorCode::DegenerateInput, "bad_set requires a non-degenerate polynomial");
  }
  std::set<Elem> values;
  for (const auto& line : constant_lines(p)) values.insert(line.value);
  std::vector<Elem> out(values.begin(), values.end());
  if (out.size() + 1 > p.degree()) {
    fail(ErrorCode::TheoremViolation, std::to_string(out.size()) + " bad values exceed deg(P) - 1 for " +
                                          p.to_string());
  }
  return out;
}

/// {x in R^2 : P(x) = 0}, ordered by (x1, x2).
inline std::vector<Point> root_set(const BiPoly& p) {
  const RingCtx& ctx = p.ctx();
  const std::uint64_t q = ctx.order();
  if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "plane exceeds 2^24 points");
  const auto rows = p.by_x2_degree();
  std::vector<UniPoly> row_polys;
  row_polys.reserve(rows.size());
  for (const auto& r : rows) row_polys.emplace_back(ctx, r);
  std::vector<Point> out;
  std::vector<Elem> coeffs(rows.size());
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::size_t j = 0; j < rows.size(); ++j) coeffs[j] = row_polys[j](Elem{a});
    for (std::uint32_t b = 0; b < q; ++b) {
      Elem acc = ctx.zero();
      for (std::size_t j = coeffs.size(); j-- > 0;) acc = ctx.add(ctx.mul(acc, Elem{b}), coeffs[j]);
      if (acc == ctx.zero()) out.push_back({Elem{a}, Elem{b}});
    }
  }
  return out;
}

}  // namespace sumprod
