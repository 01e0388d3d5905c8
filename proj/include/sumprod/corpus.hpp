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

// The standard seeded corpora for the sum-product and distance checks. The
// calibration split fixes the constant; the held-out split uses disjoint sets
// (different generators and seeds) on the same rings.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sumprod/algebra.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/parser.hpp"

namespace sumprod::corpus {

enum class Split { Calibration, HeldOut };

inline constexpr std::uint64_t kFieldOrders[] = {101, 199, 499};
inline constexpr std::uint64_t kModuli[] = {91, 143};

inline std::vector<std::string> theorem1_polys() { return {"x1*x2", "x1^2+x2^2", "x1^2+x2"}; }
inline std::vector<std::string> distance_polys() { return {"x1^2+x2^2", "x1*x2"}; }

namespace detail {

// Multiplicative order of r in the field, capped at `cap`.
inline std::uint64_t order_at_least(const RingCtx& ctx, Elem r, std::uint64_t cap) {
  Elem x = r;
  for (std::uint64_t k = 1; k <= cap; ++k, x = ctx.mul(x, r)) {
    if (x == ctx.one()) return k;
  }
  return cap + 1;
}

// The `skip`-th (0-based) ratio r >= 2 whose powers 1, r, ..., r^{n-1} are
// distinct.
inline std::int64_t ratio_for(const RingCtx& ctx, std::uint64_t n, unsigned skip) {
  for (std::int64_t r = 2; r < static_cast<std::int64_t>(ctx.order()); ++r) {
    if (order_at_least(ctx, ctx.from_int(r), n) >= n && skip-- == 0) return r;
  }
  fail(ErrorCode::InvalidArgument, "no ratio with long enough orbit");
}

inline std::vector<std::uint64_t> window_sizes(double lo, double hi, Split split) {
  const auto a = static_cast<std::uint64_t>(std::ceil(lo));
  const auto b = static_cast<std::uint64_t>(std::floor(hi));
  if (a > b) return {};
  if (split == Split::Calibration) return {a, a + (b - a) / 2, b};
  return {a + (b - a) / 4, a + 3 * (b - a) / 4};
}

inline std::vector<Point> random_points(const RingCtx& ctx, std::uint64_t n, std::uint64_t seed) {
  return generate_points({"random:" + std::to_string(n) + ":seed=" + std::to_string(seed)}, ctx);
}

// {(s1 + t1 i, s2 + t2 j)} for 0 <= i, j < side.
inline std::vector<Point> progression_grid(const RingCtx& ctx, std::uint64_t side, std::int64_t s1, std::int64_t t1,
                                           std::int64_t s2, std::int64_t t2) {
  const auto xs = generate(SetSpec::progression(s1, t1, side), ctx);
  const auto ys = generate(SetSpec::progression(s2, t2, side), ctx);
  std::vector<Point> out;
  for (const auto x : xs) {
    for (const auto y : ys) out.push_back({x, y});
  }
  return out;
}

}  // namespace detail

/// max{|A+A|, |P(A)|} over F_q for non-degenerate quadratic P, with |A| at the
/// edges and middle of the nontrivial window (calibration) or at its quartiles
/// (held out), plus a few out-of-range members.
inline std::vector<TheoremCheck> theorem1_corpus(Split split) {
  std::vector<TheoremCheck> out;
  const bool cal = split == Split::Calibration;
  std::uint64_t seed = cal ? 1 : 1001;
  for (const auto q : kFieldOrders) {
    const RingCtx ctx = RingCtx::prime_field(q);
    for (const auto& text : theorem1_polys()) {
      const BiPoly p = parse_poly(text, ctx);
      const double k = p.degree();
      auto sizes = detail::window_sizes(k * k * std::sqrt(double(q)), double(q) / k, split);
      sizes.push_back(cal ? 10 : 12);  // below the window
      for (const auto n : sizes) {
        std::vector<SetSpec> specs;
        specs.push_back(cal ? SetSpec::interval(n) : SetSpec::progression(5, 3, n));
        specs.push_back(SetSpec::geometric(detail::ratio_for(ctx, n, cal ? 0 : 1), n));
        specs.push_back(SetSpec::random(n, seed++));
        for (const auto& spec : specs) {
          const auto a = generate(spec, ctx);
          auto check = theorem1_check(p, a);
          check.input += " A=" + spec.to_string();
          out.push_back(std::move(check));
        }
      }
    }
  }
  return out;
}

/// max{|A+A|, |A.A|} over Z_m for m in {91, 143}.
inline std::vector<TheoremCheck> theorem2_corpus(Split split) {
  std::vector<TheoremCheck> out;
  const bool cal = split == Split::Calibration;
  std::uint64_t seed = cal ? 1 : 2001;
  for (const auto m : kModuli) {
    const RingCtx ctx = RingCtx::modular(m);
    const double gamma = static_cast<double>(smallest_prime_factor(m));
    auto sizes = detail::window_sizes(double(m) / std::sqrt(gamma), double(m), split);
    sizes.push_back(cal ? 9 : 11);
    for (const auto n : sizes) {
      std::vector<SetSpec> specs;
      specs.push_back(cal ? SetSpec::interval(n) : SetSpec::progression(2, 5, n));
      specs.push_back(SetSpec::random(n, seed++));
      for (const auto& spec : specs) {
        auto check = theorem2_check(ctx, generate(spec, ctx));
        check.input += " A=" + spec.to_string();
        out.push_back(std::move(check));
      }
    }
  }
  return out;
}

/// |Delta_P(A)| for symmetric non-degenerate P with |A| between kq and 3kq
/// (in range) and one sparse member below kq.
inline std::vector<TheoremCheck> distance_corpus(Split split) {
  std::vector<TheoremCheck> out;
  const bool cal = split == Split::Calibration;
  std::uint64_t seed = cal ? 1 : 3001;
  for (const auto q : kFieldOrders) {
    const RingCtx ctx = RingCtx::prime_field(q);
    for (const auto& text : distance_polys()) {
      const BiPoly p = parse_poly(text, ctx);
      const std::uint64_t kq = p.degree() * q;
      const std::vector<std::uint64_t> sizes =
          cal ? std::vector<std::uint64_t>{kq, 3 * kq} : std::vector<std::uint64_t>{2 * kq};
      for (const auto n : sizes) {
        const auto side = static_cast<std::uint64_t>(std::ceil(std::sqrt(double(n))));
        auto random = distance_check(p, detail::random_points(ctx, n, seed));
        random.input += " A=random:" + std::to_string(n) + ":seed=" + std::to_string(seed++);
        out.push_back(std::move(random));
        auto grid = cal ? distance_check(p, detail::progression_grid(ctx, side, 1, 1, 1, 1))
                        : distance_check(p, detail::progression_grid(ctx, side, 5, 3, 7, 2));
        grid.input += " A=grid:" + std::to_string(side) + (cal ? "" : ":ap");
        out.push_back(std::move(grid));
      }
      auto sparse = distance_check(p, detail::random_points(ctx, q / 2, seed));
      sparse.input += " A=random:" + std::to_string(q / 2) + ":seed=" + std::to_string(seed++);
      out.push_back(std::move(sparse));
    }
  }
  return out;
}

/// Level sets P - a without linear factors, k <= 4, q <= 199.
struct WeilCase {
  std::uint64_t q;
  std::string poly;
  std::int64_t a;
};

inline std::vector<WeilCase> weil_corpus() {
  const std::vector<std::string> polys = {"x1*x2", "x1^2+x2^2", "x1^3+x2^2", "x1^2*x2+x2^3+x1",
                                          "x1^4+x1*x2+x2^3", "x1^3*x2+2*x2^2+x1"};
  std::vector<WeilCase> out;
  for (const std::uint64_t q : {7, 31, 101, 199}) {
    const RingCtx ctx = RingCtx::prime_field(q);
    for (const auto& text : polys) {
      const BiPoly p = parse_poly(text, ctx);
      int taken = 0;
      for (std::int64_t a = 1; a < static_cast<std::int64_t>(q) && taken < 2; ++a) {
        if (has_linear_factor(p.minus_constant(ctx.from_int(a)))) continue;
        out.push_back({q, text, a});
        ++taken;
      }
    }
  }
  return out;
}

}  // namespace sumprod::corpus
