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

// Gauss, Kloosterman and root-set exponential sums, evaluated directly, and
// the spectral-gap check for Cayley graphs of diagonalizable quadratic forms
// over Z_m.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "sumprod/algebra.hpp"
#include "sumprod/bipoly.hpp"
#include "sumprod/cayley.hpp"
#include "sumprod/detail/parallel.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

inline constexpr double kBoundTolerance = 1e-6;

struct SumValue {
  Complex value{};
  double magnitude = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // magnitude / bound (0 when the bound is 0)
};

namespace detail {

inline SumValue make_sum(Complex value, double bound) {
  SumValue s{value, std::abs(value), bound, 0.0};
  if (bound > 0) s.ratio = s.magnitude / bound;
  return s;
}

inline Complex e_over(std::uint64_t k, std::uint64_t m) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % m) / static_cast<double>(m);
  return {std::cos(angle), std::sin(angle)};
}

inline void require_odd(std::uint64_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (m % 2 == 0) fail(ErrorCode::EvenModulus, "modulus " + std::to_string(m) + " is even");
}

}  // namespace detail

/// sum_{y in Z_m} e(z y^2 / m), m odd, gcd(z, m) = 1. Bound is sqrt(m).
inline SumValue gauss_sum(std::uint64_t m, std::uint64_t z) {
  detail::require_odd(m);
  if (detail::gcd(z % m, m) != 1) fail(ErrorCode::NotAUnit, std::to_string(z) + " is not a unit mod " + std::to_string(m));
  Complex acc{};
  for (std::uint64_t y = 0; y < m; ++y) acc += detail::e_over(z % m * (y * y % m), m);
  return detail::make_sum(acc, std::sqrt(static_cast<double>(m)));
}

/// sum over units y of e((a y + b y^{-1}) / m), m odd. Bound
/// tau(m) gcd(a, b, m)^{1/2} sqrt(m); exceeding it raises TheoremViolation.
inline SumValue kloosterman(std::uint64_t m, std::uint64_t a, std::uint64_t b) {
  detail::require_odd(m);
  a %= m;
  b %= m;
  Complex acc{};
  for (std::uint64_t y = 0; y < m; ++y) {
    const auto inv = detail::inverse_mod(y, m);
    if (!inv) continue;
    acc += detail::e_over((a * y + b * *inv) % m, m);
  }
  const std::uint64_t g = detail::gcd(detail::gcd(a, b), m);
  const double bound = static_cast<double>(divisor_count(m)) * std::sqrt(static_cast<double>(g)) *
                       std::sqrt(static_cast<double>(m));
  SumValue s = detail::make_sum(acc, bound);
  if (s.magnitude > bound + kBoundTolerance) {
    fail(ErrorCode::TheoremViolation, "Kloosterman bound exceeded for m=" + std::to_string(m) +
                                          " a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  return s;
}

/// Exponential sums over a fixed root set: x -> sum_{x in Root(P)} e(x . y).
/// The precondition (no linear factor) is checked once at construction.
class RootSetSum {
 public:
  explicit RootSetSum(const BiPoly& p) : ctx_(p.ctx()), degree_(p.degree()) {
    detail::require_field(ctx_, "weil_sum");
    if (const auto factor = has_linear_factor(p)) {
      fail(ErrorCode::LinearFactorPresent, p.to_string() + " has the linear factor " + factor->to_string());
    }
    roots_ = root_set(p);
  }

  const std::vector<Point>& roots() const noexcept { return roots_; }

  /// k^2 sqrt(q).
  double bound() const noexcept {
    return static_cast<double>(degree_) * degree_ * std::sqrt(static_cast<double>(ctx_.order()));
  }

  SumValue operator()(Point y) const {
    if (y == Point{}) fail(ErrorCode::ZeroFrequency, "frequency must be nonzero");
    Complex acc{};
    for (const auto& x : roots_) acc += ctx_.character(y, x);
    return detail::make_sum(acc, bound());
  }

 private:
  RingCtx ctx_;
  unsigned degree_;
  std::vector<Point> roots_;
};

inline SumValue weil_sum(const BiPoly& p, Point y) { return RootSetSum(p)(y); }

/// a x^2 + b x y + c y^2 over Z_m.
struct QuadraticForm {
  RingCtx ctx;
  Elem a;
  Elem b;
  Elem c;

  /// Q = A1 u^2 + A2 v^2 where (u, v) = basis * (x, y).
  struct Diagonal {
    Elem a1;
    Elem a2;
    std::array<std::array<Elem, 2>, 2> basis;
  };
  std::optional<Diagonal> diag;

  BiPoly to_poly() const {
    BiPoly p(ctx);
    p.add_term({2, 0}, a);
    p.add_term({1, 1}, b);
    p.add_term({0, 2}, c);
    return p;
  }

  std::string to_string() const { return to_poly().to_string(); }
};

namespace detail {

// Q(M(x, y)) for a substitution matrix M (x = m00 x' + m01 y', ...).
inline QuadraticForm substitute(const QuadraticForm& q, const std::array<std::array<Elem, 2>, 2>& m) {
  const BiPoly s = substitute_linear(q.to_poly(), m[0][0], m[0][1], m[1][0], m[1][1]);
  return {q.ctx, s.coefficient(2, 0), s.coefficient(1, 1), s.coefficient(0, 2), std::nullopt};
}

inline std::array<std::array<Elem, 2>, 2> mat_mul(const RingCtx& ctx, const std::array<std::array<Elem, 2>, 2>& x,
                                                  const std::array<std::array<Elem, 2>, 2>& y) {
  std::array<std::array<Elem, 2>, 2> out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = ctx.add(ctx.mul(x[i][0], y[0][j]), ctx.mul(x[i][1], y[1][j]));
  }
  return out;
}

// Completing the square on a unit pivot. `swap` selects the y^2 pivot.
inline std::optional<QuadraticForm::Diagonal> complete_square(const QuadraticForm& q, bool swap) {
  const RingCtx& ctx = q.ctx;
  const Elem pivot = swap ? q.c : q.a;
  const Elem other = swap ? q.a : q.c;
  if (!ctx.is_unit(pivot)) return std::nullopt;
  // pivot (s + b/(2 pivot) t)^2 + (other - b^2/(4 pivot)) t^2, with s the pivot variable.
  const Elem two = ctx.from_int(2);
  const Elem shift = ctx.div(q.b, ctx.mul(two, pivot));
  const Elem rest = ctx.sub(other, ctx.div(ctx.mul(q.b, q.b), ctx.mul(ctx.from_int(4), pivot)));
  if (!ctx.is_unit(rest)) return std::nullopt;
  QuadraticForm::Diagonal d;
  d.a1 = pivot;
  d.a2 = rest;
  if (swap) {
    d.basis = {{{shift, ctx.one()}, {ctx.one(), ctx.zero()}}};
  } else {
    d.basis = {{{ctx.one(), shift}, {ctx.zero(), ctx.one()}}};
  }
  return d;
}

// Scales each basis row so its first nonzero entry is 1 when that entry is a unit.
inline void normalize_rows(const RingCtx& ctx, QuadraticForm::Diagonal& d) {
  for (int row = 0; row < 2; ++row) {
    auto& r = d.basis[row];
    const Elem lead = r[0] != ctx.zero() ? r[0] : r[1];
    if (!ctx.is_unit(lead) || lead == ctx.one()) continue;
    const Elem inv = ctx.inv(lead);
    r[0] = ctx.mul(r[0], inv);
    r[1] = ctx.mul(r[1], inv);
    Elem& coeff = row == 0 ? d.a1 : d.a2;
    coeff = ctx.mul(coeff, ctx.mul(lead, lead));
  }
}

inline bool verify_diagonal(const QuadraticForm& q, const QuadraticForm::Diagonal& d) {
  const RingCtx& ctx = q.ctx;
  const BiPoly u = BiPoly::linear({ctx, d.basis[0][0], d.basis[0][1], ctx.zero()});
  const BiPoly v = BiPoly::linear({ctx, d.basis[1][0], d.basis[1][1], ctx.zero()});
  const BiPoly expanded = (u * u).scaled(d.a1) + (v * v).scaled(d.a2);
  const Elem det = ctx.sub(ctx.mul(d.basis[0][0], d.basis[1][1]), ctx.mul(d.basis[0][1], d.basis[1][0]));
  return expanded == q.to_poly() && ctx.is_unit(det) && ctx.is_unit(d.a1) && ctx.is_unit(d.a2);
}

}  // namespace detail

/// Finds a unit change of variables with Q = A1 u^2 + A2 v^2, A1, A2 units.
/// Pivots tried: a, then c, then (b a unit) the substitution x -> x + y.
inline QuadraticForm diagonalize(QuadraticForm q) {
  const RingCtx& ctx = q.ctx;
  if (ctx.kind() != RingKind::ModularRing && ctx.characteristic() == 2) {
    fail(ErrorCode::EvenModulus, "2 must be a unit");
  }
  if (ctx.kind() == RingKind::ModularRing) detail::require_odd(ctx.modulus());

  std::optional<QuadraticForm::Diagonal> d = detail::complete_square(q, false);
  if (!d) d = detail::complete_square(q, true);
  if (!d && ctx.is_unit(q.b)) {
    // x = x' + y', y = y'; the new basis is expressed back in (x, y).
    const std::array<std::array<Elem, 2>, 2> shear{{{ctx.one(), ctx.one()}, {ctx.zero(), ctx.one()}}};
    const std::array<std::array<Elem, 2>, 2> shear_inv{{{ctx.one(), ctx.neg(ctx.one())}, {ctx.zero(), ctx.one()}}};
    const QuadraticForm sheared = detail::substitute(q, shear);
    auto inner = detail::complete_square(sheared, false);
    if (!inner) inner = detail::complete_square(sheared, true);
    if (inner) {
      inner->basis = detail::mat_mul(ctx, inner->basis, shear_inv);
      d = inner;
    }
  }
  if (!d) fail(ErrorCode::NotInOmega, q.to_string() + " has no unit diagonal form over " + ctx.describe());
  detail::normalize_rows(ctx, *d);
  if (!detail::verify_diagonal(q, *d)) {
    fail(ErrorCode::TheoremViolation, "diagonal form does not expand back to Q");
  }
  q.diag = d;
  return q;
}

struct Gap2Row {
  Elem a;
  std::size_t degree = 0;
  double lambda = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool holds = false;
};

struct Gap2Report {
  std::uint64_t m = 0;
  std::uint64_t g = 0;
  std::uint64_t gamma = 0;
  double bound = 0.0;  // g(m) m / gamma(m)^{1/2}
  std::vector<Gap2Row> rows;
  bool all_hold = true;
};

/// lambda(G_a) <= g(m) m / gamma(m)^{1/2} for every a != 0, where G_a is the
/// Cayley graph of Root(Q - a) in Z_m^2.
inline Gap2Report gap2_check(const QuadraticForm& q_in) {
  const RingCtx& ctx = q_in.ctx;
  if (ctx.kind() != RingKind::ModularRing) fail(ErrorCode::WrongKind, "gap2_check works over Z_m");
  const QuadraticForm q = diagonalize(q_in);
  const std::uint64_t m = ctx.modulus();
  if (m * m > kMaxPlaneSize) fail(ErrorCode::TooLarge, "m^2 exceeds 2^24");

  Gap2Report report;
  report.m = m;
  report.g = g_recursive(m);
  report.gamma = smallest_prime_factor(m);
  report.bound = static_cast<double>(report.g) * static_cast<double>(m) / std::sqrt(static_cast<double>(report.gamma));
  report.rows.resize(m - 1);
  const BiPoly poly = q.to_poly();
  detail::parallel_chunks(m - 1, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Elem a{static_cast<std::uint32_t>(i + 1)};
      const auto graph = CayleyDigraph::from_level_set(poly, a);
      const auto spec = spectrum(graph);
      Gap2Row& row = report.rows[i];
      row.a = a;
      row.degree = graph.degree();
      row.lambda = spec.lambda;
      row.bound = report.bound;
      row.ratio = spec.lambda / report.bound;
      row.holds = spec.lambda <= report.bound + kBoundTolerance;
    }
  }, 1);
  for (const auto& row : report.rows) report.all_hold = report.all_hold && row.holds;
  return report;
}

inline Gap2Report gap2_check(const QuadraticForm& q, std::uint64_t m) {
  if (q.ctx.kind() != RingKind::ModularRing || q.ctx.modulus() != m) {
    fail(ErrorCode::InvalidArgument, "form is not defined over Z_" + std::to_string(m));
  }
  return gap2_check(q);
}

}  // namespace sumprod
