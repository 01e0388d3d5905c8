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

// Set generators, sum / product / image / distance sets, and the
// theorem-level inequality checks with an empirically measured constant.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "sumprod/algebra.hpp"
#include "sumprod/bipoly.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

inline constexpr std::uint64_t kMaxPairWork = 100000000;

// ---------------------------------------------------------------------------
// Set generation

struct SetSpec {
  enum class Kind { Interval, Progression, Geometric, Random, Subfield, Explicit };

  Kind kind = Kind::Interval;
  std::uint64_t n = 0;
  std::int64_t start = 1;
  std::int64_t step = 1;
  std::int64_t ratio = 2;
  std::uint64_t seed = 0;
  unsigned subfield_degree = 1;
  std::vector<std::uint64_t> values;

  static SetSpec make(Kind kind, std::uint64_t n = 0) {
    SetSpec s;
    s.kind = kind;
    s.n = n;
    return s;
  }
  static SetSpec interval(std::uint64_t n) { return make(Kind::Interval, n); }
  static SetSpec progression(std::int64_t start, std::int64_t step, std::uint64_t n) {
    SetSpec s = make(Kind::Progression, n);
    s.start = start;
    s.step = step;
    return s;
  }
  static SetSpec geometric(std::int64_t ratio, std::uint64_t n) {
    SetSpec s = make(Kind::Geometric, n);
    s.ratio = ratio;
    return s;
  }
  static SetSpec random(std::uint64_t n, std::uint64_t seed) {
    SetSpec s = make(Kind::Random, n);
    s.seed = seed;
    return s;
  }
  static SetSpec subfield(unsigned degree = 1) {
    SetSpec s = make(Kind::Subfield);
    s.subfield_degree = degree;
    return s;
  }
  static SetSpec explicit_set(std::vector<std::uint64_t> values) {
    SetSpec s = make(Kind::Explicit, values.size());
    s.values = std::move(values);
    return s;
  }

  /// interval:N | ap:START:STEP:N | geometric:RATIO:N | random:N[:seed=S] |
  /// subfield[:D] | list:V1,V2,...
  static SetSpec parse(const std::string& text, std::uint64_t default_seed = 0);

  std::string to_string() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::Interval: os << "interval:" << n; break;
      case Kind::Progression: os << "ap:" << start << ':' << step << ':' << n; break;
      case Kind::Geometric: os << "geometric:" << ratio << ':' << n; break;
      case Kind::Random: os << "random:" << n << ":seed=" << seed; break;
      case Kind::Subfield: os << "subfield:" << subfield_degree; break;
      case Kind::Explicit: {
        os << "list:";
        for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
        break;
      }
    }
    return os.str();
  }
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

inline std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    fail(ErrorCode::InvalidArgument, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(ErrorCode::InvalidArgument, "expected an integer, got '" + s + "'");
  return v;
}

inline std::uint64_t to_uint(const std::string& s) {
  const auto v = to_int(s);
  if (v < 0) fail(ErrorCode::InvalidArgument, "expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

// Reads "seed=S" or a bare integer.
inline std::uint64_t seed_field(const std::string& s) {
  return to_uint(s.rfind("seed=", 0) == 0 ? s.substr(5) : s);
}

}  // namespace detail

inline SetSpec SetSpec::parse(const std::string& text, std::uint64_t default_seed) {
  const auto parts = detail::split(text, ':');
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "empty set spec");
  const std::string& kind = parts[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi) fail(ErrorCode::InvalidArgument, "malformed set spec '" + text + "'");
  };
  if (kind == "interval") {
    need(2, 2);
    return interval(detail::to_uint(parts[1]));
  }
  if (kind == "ap") {
    need(4, 4);
    return progression(detail::to_int(parts[1]), detail::to_int(parts[2]), detail::to_uint(parts[3]));
  }
  if (kind == "geometric") {
    need(3, 3);
    return geometric(detail::to_int(parts[1]), detail::to_uint(parts[2]));
  }
  if (kind == "random") {
    need(2, 3);
    return random(detail::to_uint(parts[1]), parts.size() == 3 ? detail::seed_field(parts[2]) : default_seed);
  }
  if (kind == "subfield") {
    need(1, 2);
    return subfield(parts.size() == 2 ? static_cast<unsigned>(detail::to_uint(parts[1])) : 1);
  }
  if (kind == "list") {
    need(2, 2);
    std::vector<std::uint64_t> values;
    for (const auto& v : detail::split(parts[1], ',')) values.push_back(detail::to_uint(v));
    return explicit_set(std::move(values));
  }
  fail(ErrorCode::InvalidArgument, "unknown set kind '" + kind + "'");
}

namespace detail {

inline std::vector<Elem> distinct_or_fail(std::vector<Elem> values, const std::string& what) {
  std::vector<Elem> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::InvalidArgument, what + " wraps around and repeats elements");
  }
  return sorted;
}

}  // namespace detail

/// Generated set, ascending, with exactly the requested cardinality.
inline std::vector<Elem> generate(const SetSpec& spec, const RingCtx& ctx) {
  std::vector<Elem> out;
  switch (spec.kind) {
    case SetSpec::Kind::Interval:
      for (std::uint64_t i = 1; i <= spec.n; ++i) out.push_back(ctx.from_int(static_cast<std::int64_t>(i)));
      return detail::distinct_or_fail(std::move(out), spec.to_string());
    case SetSpec::Kind::Progression:
      for (std::uint64_t i = 0; i < spec.n; ++i) {
        out.push_back(ctx.from_int(spec.start + static_cast<std::int64_t>(i) * spec.step));
      }
      return detail::distinct_or_fail(std::move(out), spec.to_string());
    case SetSpec::Kind::Geometric: {
      const Elem r = ctx.from_int(spec.ratio);
      Elem x = ctx.one();
      for (std::uint64_t i = 0; i < spec.n; ++i, x = ctx.mul(x, r)) out.push_back(x);
      return detail::distinct_or_fail(std::move(out), spec.to_string());
    }
    case SetSpec::Kind::Random: {
      if (spec.n > ctx.order()) fail(ErrorCode::InvalidArgument, "random set larger than the ring");
      // Floyd's sampling without replacement.
      std::mt19937_64 rng(spec.seed);
      std::unordered_set<std::uint32_t> chosen;
      const std::uint64_t order = ctx.order();
      for (std::uint64_t j = order - spec.n; j < order; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        const auto t = static_cast<std::uint32_t>(pick(rng));
        chosen.insert(chosen.count(t) ? static_cast<std::uint32_t>(j) : t);
      }
      for (const auto v : chosen) out.push_back(Elem{v});
      std::sort(out.begin(), out.end());
      return out;
    }
    case SetSpec::Kind::Subfield: {
      if (!ctx.is_field()) fail(ErrorCode::WrongKind, "subfield sets need a field");
      if (spec.subfield_degree == 0 || ctx.degree() % spec.subfield_degree != 0) {
        fail(ErrorCode::InvalidArgument, "subfield degree must divide the extension degree");
      }
      // F_{p^d} = {x : x^{p^d} = x}
      std::uint64_t size = 1;
      for (unsigned i = 0; i < spec.subfield_degree; ++i) size *= ctx.characteristic();
      for (std::uint32_t v = 0; v < ctx.order(); ++v) {
        if (ctx.pow(Elem{v}, size) == Elem{v}) out.push_back(Elem{v});
      }
      return out;
    }
    case SetSpec::Kind::Explicit:
      for (const auto v : spec.values) out.push_back(ctx.element(v));
      return detail::distinct_or_fail(std::move(out), spec.to_string());
  }
  return out;
}

/// Point sets in R^2: plane | grid:N (interval x interval) | random:N[:seed=S]
/// | pts:X,Y;X,Y;...
struct PointSetSpec {
  std::string text;
};

inline std::vector<Point> generate_points(const PointSetSpec& spec, const RingCtx& ctx,
                                          std::uint64_t default_seed = 0) {
  const auto parts = detail::split(spec.text, ':');
  const std::uint64_t q = ctx.order();
  std::vector<Point> out;
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "empty point-set spec");
  if (parts[0] == "plane" && parts.size() == 1) {
    if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "plane exceeds 2^24 points");
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) out.push_back({Elem{a}, Elem{b}});
    }
    return out;
  }
  if (parts[0] == "grid" && parts.size() == 2) {
    const auto line = generate(SetSpec::interval(detail::to_uint(parts[1])), ctx);
    for (const auto a : line) {
      for (const auto b : line) out.push_back({a, b});
    }
    return out;
  }
  if (parts[0] == "random" && (parts.size() == 2 || parts.size() == 3)) {
    const std::uint64_t n = detail::to_uint(parts[1]);
    const std::uint64_t seed = parts.size() == 3 ? detail::seed_field(parts[2]) : default_seed;
    if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "plane exceeds 2^24 points");
    if (n > q * q) fail(ErrorCode::InvalidArgument, "random point set larger than the plane");
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = q * q - n; j < q * q; ++j) {
      std::uniform_int_distribution<std::uint64_t> pick(0, j);
      const auto t = pick(rng);
      chosen.insert(chosen.count(t) ? j : t);
    }
    for (const auto v : chosen) out.push_back({Elem{static_cast<std::uint32_t>(v / q)}, Elem{static_cast<std::uint32_t>(v % q)}});
    std::sort(out.begin(), out.end());
    return out;
  }
  if (parts[0] == "pts" && parts.size() == 2) {
    for (const auto& pair : detail::split(parts[1], ';')) {
      const auto xy = detail::split(pair, ',');
      if (xy.size() != 2) fail(ErrorCode::InvalidArgument, "points are written X,Y");
      out.push_back({ctx.element(detail::to_uint(xy[0])), ctx.element(detail::to_uint(xy[1]))});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  fail(ErrorCode::InvalidArgument, "malformed point-set spec '" + spec.text + "'");
}

// ---------------------------------------------------------------------------
// Set computations

namespace detail {

inline void require_pair_budget(std::uint64_t size) {
  if (size * size > kMaxPairWork) fail(ErrorCode::TooLarge, "|A|^2 exceeds 10^8");
}

template <class Op>
std::vector<Elem> pairwise(const RingCtx& ctx, std::span<const Elem> a, Op op) {
  require_pair_budget(a.size());
  std::vector<bool> hit(ctx.order(), false);
  for (const auto x : a) {
    for (const auto y : a) hit[op(x, y).value] = true;
  }
  std::vector<Elem> out;
  for (std::uint32_t v = 0; v < ctx.order(); ++v) {
    if (hit[v]) out.push_back(Elem{v});
  }
  return out;
}

}  // namespace detail

inline std::vector<Elem> sumset(const RingCtx& ctx, std::span<const Elem> a) {
  return detail::pairwise(ctx, a, [&](Elem x, Elem y) { return ctx.add(x, y); });
}

inline std::vector<Elem> productset(const RingCtx& ctx, std::span<const Elem> a) {
  return detail::pairwise(ctx, a, [&](Elem x, Elem y) { return ctx.mul(x, y); });
}

/// P(A) = {P(x1, x2) : x1, x2 in A}.
inline std::vector<Elem> image_set(const BiPoly& p, std::span<const Elem> a) {
  return detail::pairwise(p.ctx(), a, [&](Elem x, Elem y) { return p(Point{x, y}); });
}

/// P(x) = P(-x) as polynomials: even total degree on every monomial, or,
/// failing that, exhaustive evaluation over the plane.
inline bool is_symmetric(const BiPoly& p) {
  const bool parity = std::all_of(p.terms().begin(), p.terms().end(),
                                  [](const auto& t) { return (t.first.first + t.first.second) % 2 == 0; });
  if (parity) return true;
  const RingCtx& ctx = p.ctx();
  const std::uint64_t q = ctx.order();
  if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "plane exceeds 2^24 points");
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const Point x{Elem{a}, Elem{b}};
      if (p(x) != p({ctx.neg(x.x1), ctx.neg(x.x2)})) return false;
    }
  }
  return true;
}

/// {P(y - x) : x != y in A}, both orientations.
inline std::vector<Elem> distance_set(const BiPoly& p, std::span<const Point> a) {
  detail::require_pair_budget(a.size());
  const RingCtx& ctx = p.ctx();
  const std::uint64_t q = ctx.order();
  if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "plane exceeds 2^24 points");
  // Distinct differences first, then one evaluation per difference.
  std::vector<bool> diff(q * q, false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i] == a[j]) continue;
      diff[static_cast<std::size_t>(ctx.sub(a[j].x1, a[i].x1).value) * q + ctx.sub(a[j].x2, a[i].x2).value] = true;
    }
  }
  std::vector<bool> hit(q, false);
  for (std::size_t v = 0; v < diff.size(); ++v) {
    if (diff[v]) hit[p({Elem{static_cast<std::uint32_t>(v / q)}, Elem{static_cast<std::uint32_t>(v % q)}}).value] = true;
  }
  std::vector<Elem> out;
  for (std::uint32_t v = 0; v < ctx.order(); ++v) {
    if (hit[v]) out.push_back(Elem{v});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem checks

enum class Regime { InRange, OutOfRange };

constexpr std::string_view to_string(Regime r) noexcept {
  return r == Regime::InRange ? "in-range" : "out-of-range";
}

struct TheoremCheck {
  std::string name;
  std::string input;  // human-readable description of (P, A)
  std::uint64_t size = 0;
  std::uint64_t lhs = 0;
  double rhs_at_delta_1 = 0.0;
  double empirical_delta = 0.0;  // lhs / rhs_at_delta_1
  Regime regime = Regime::OutOfRange;
  std::string note;

  bool in_range() const noexcept { return regime == Regime::InRange; }
  double rhs(double delta) const noexcept { return delta * rhs_at_delta_1; }
  bool holds(double delta) const noexcept {
    return static_cast<double>(lhs) >= delta * rhs_at_delta_1 - 1e-9 * std::max(1.0, rhs_at_delta_1);
  }
};

namespace detail {

inline double ratio_or_inf(std::uint64_t lhs, double rhs) {
  if (rhs > 0) return static_cast<double>(lhs) / rhs;
  return lhs > 0 ? std::numeric_limits<double>::infinity() : 0.0;
}

}  // namespace detail

/// max{|A+A|, |P(A)|} against |A| min{(|A|^2/(k^4 q))^{1/4}, (q/(k|A|))^{1/3}}.
/// In range when k^2 sqrt(q) <= |A| <= q / k.
inline TheoremCheck theorem1_check(const BiPoly& p, std::span<const Elem> a_in) {
  if (degeneracy_test(p).degenerate()) {
    fail(ErrorCode::DegenerateInput, p.to_string() + " is degenerate");
  }
  std::vector<Elem> a(a_in.begin(), a_in.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const RingCtx& ctx = p.ctx();
  const double k = p.degree();
  const double q = ctx.order();
  const double n = static_cast<double>(a.size());

  TheoremCheck c;
  c.name = "theorem1";
  c.input = "P=" + p.to_string() + " over " + ctx.describe();
  c.size = a.size();
  const auto sums = sumset(ctx, a).size();
  const auto image = image_set(p, a).size();
  c.lhs = std::max<std::uint64_t>(sums, image);
  c.rhs_at_delta_1 = n * std::min(std::pow(n * n / (k * k * k * k * q), 0.25), std::cbrt(q / (k * n)));
  c.empirical_delta = detail::ratio_or_inf(c.lhs, c.rhs_at_delta_1);
  c.regime = (k * k * std::sqrt(q) <= n && n <= q / k) ? Regime::InRange : Regime::OutOfRange;
  c.note = "|A+A|=" + std::to_string(sums) + " |P(A)|=" + std::to_string(image);
  return c;
}

/// max{|A+A|, |A.A|} over Z_m against
/// |A| min{gamma^{1/4} |A|^{1/2} / m^{1/2}, (m/|A|)^{1/3}}.
/// In range when m is odd and m / sqrt(gamma) <= |A| <= m.
inline TheoremCheck theorem2_check(const RingCtx& ctx, std::span<const Elem> a_in) {
  if (ctx.kind() != RingKind::ModularRing) fail(ErrorCode::WrongKind, "theorem2_check works over Z_m");
  std::vector<Elem> a(a_in.begin(), a_in.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const std::uint64_t m_int = ctx.modulus();
  const double m = static_cast<double>(m_int);
  const double gamma = static_cast<double>(smallest_prime_factor(m_int));
  const double n = static_cast<double>(a.size());

  TheoremCheck c;
  c.name = "theorem2";
  c.input = "Z_" + std::to_string(m_int);
  c.size = a.size();
  const auto sums = sumset(ctx, a).size();
  const auto products = productset(ctx, a).size();
  c.lhs = std::max<std::uint64_t>(sums, products);
  c.rhs_at_delta_1 = n * std::min(std::pow(gamma, 0.25) * std::sqrt(n) / std::sqrt(m), std::cbrt(m / n));
  c.empirical_delta = detail::ratio_or_inf(c.lhs, c.rhs_at_delta_1);
  const bool odd = m_int % 2 == 1;
  c.regime = (odd && m / std::sqrt(gamma) <= n && n <= m) ? Regime::InRange : Regime::OutOfRange;
  c.note = "|A+A|=" + std::to_string(sums) + " |A.A|=" + std::to_string(products);
  if (!odd) c.note += "; even modulus: outside verified-bound regime";
  if (gamma * gamma < m) c.note += "; small least prime factor: effective only for products of few large primes";
  return c;
}

/// |Delta_P(A)| against min{|A| / (k^2 sqrt(q)), q / k}. In range when
/// |A| >= k q.
inline TheoremCheck distance_check(const BiPoly& p, std::span<const Point> a_in) {
  if (!is_symmetric(p)) fail(ErrorCode::NotSymmetric, p.to_string() + " is not symmetric about the origin");
  if (degeneracy_test(p).degenerate()) fail(ErrorCode::DegenerateInput, p.to_string() + " is degenerate");
  std::vector<Point> a(a_in.begin(), a_in.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const RingCtx& ctx = p.ctx();
  const double k = p.degree();
  const double q = ctx.order();
  const double n = static_cast<double>(a.size());

  TheoremCheck c;
  c.name = "distance";
  c.input = "P=" + p.to_string() + " over " + ctx.describe();
  c.size = a.size();
  c.lhs = distance_set(p, a).size();
  c.rhs_at_delta_1 = std::min(n / (k * k * std::sqrt(q)), q / k);
  c.empirical_delta = detail::ratio_or_inf(c.lhs, c.rhs_at_delta_1);
  c.regime = n >= k * q ? Regime::InRange : Regime::OutOfRange;
  return c;
}

/// Largest delta for which every in-range check of the corpus holds.
inline double calibrate_delta(std::span<const TheoremCheck> corpus) {
  double delta = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& c : corpus) {
    if (!c.in_range()) continue;
    any = true;
    delta = std::min(delta, c.empirical_delta);
  }
  if (!any) fail(ErrorCode::EmptyCorpus, "no in-range checks to calibrate on");
  return delta;
}

}  // namespace sumprod
