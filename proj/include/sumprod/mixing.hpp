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

// Edge counting between vertex sets, the mixing inequality for normal
// digraphs, and the decomposition-lemma counting harness.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "sumprod/bipoly.hpp"
#include "sumprod/cayley.hpp"
#include "sumprod/detail/parallel.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

inline constexpr double kMixingTolerance = 1e-6;

namespace detail {

inline std::vector<Point> as_set(std::span<const Point> pts) {
  std::vector<Point> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<bool> membership(const CayleyDigraph& g, std::span<const Point> pts) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (const auto& p : pts) mask[g.index(p)] = true;
  return mask;
}

// |N_C(v)| for every v in B.
inline std::vector<std::uint32_t> neighbour_counts(const CayleyDigraph& g, std::span<const Point> b,
                                                   const std::vector<bool>& in_c) {
  std::vector<std::uint32_t> counts(b.size(), 0);
  parallel_chunks(b.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::uint32_t c = 0;
      for (const auto& s : g.generators()) c += in_c[g.index(g.add(b[i], s))] ? 1 : 0;
      counts[i] = c;
    }
  });
  return counts;
}

}  // namespace detail

/// Number of edges x -> x + s with x in B, x + s in C. B and C are sets.
inline std::uint64_t count_edges(const CayleyDigraph& g, std::span<const Point> b, std::span<const Point> c) {
  const auto bs = detail::as_set(b);
  const auto in_c = detail::membership(g, c);
  std::uint64_t total = 0;
  for (const auto k : detail::neighbour_counts(g, bs, in_c)) total += k;
  return total;
}

struct MixingReport {
  std::uint64_t edges = 0;   // e(B, C)
  double expected = 0.0;     // d |B| |C| / n
  double defect = 0.0;       // |e(B, C) - expected|
  double bound = 0.0;        // lambda sqrt(|B| |C|)
  bool holds = false;        // defect <= bound + 1e-6
  // Intermediate inequality of the proof:
  // sum_{v in B} (|N_C(v)| - c d)^2 <= lambda^2 |C|, c = |C| / n.
  double square_deviation = 0.0;
  double square_bound = 0.0;
};

/// Checks |e(B,C) - d|B||C|/n| <= lambda(G) sqrt(|B||C|). The intermediate
/// square-deviation inequality is proven for normal digraphs; its failure
/// raises TheoremViolation.
inline MixingReport mixing_check(const CayleyDigraph& g, const Spectrum& spec, std::span<const Point> b,
                                 std::span<const Point> c) {
  const auto bs = detail::as_set(b);
  const auto cs = detail::as_set(c);
  const auto counts = detail::neighbour_counts(g, bs, detail::membership(g, cs));
  const double n = static_cast<double>(g.vertex_count());
  const double d = static_cast<double>(g.degree());
  const double nb = static_cast<double>(bs.size());
  const double nc = static_cast<double>(cs.size());
  const double density = nc / n;

  MixingReport r;
  for (const auto k : counts) {
    r.edges += k;
    const double dev = static_cast<double>(k) - density * d;
    r.square_deviation += dev * dev;
  }
  r.expected = d * nb * nc / n;
  r.defect = std::abs(static_cast<double>(r.edges) - r.expected);
  r.bound = spec.lambda * std::sqrt(nb * nc);
  r.holds = r.defect <= r.bound + kMixingTolerance;
  r.square_bound = spec.lambda * spec.lambda * nc;
  if (r.square_deviation > r.square_bound + kMixingTolerance * std::max(1.0, r.square_bound)) {
    fail(ErrorCode::TheoremViolation, "square-deviation inequality failed");
  }
  return r;
}

/// min{ (L - |B|d') / (2 lambda sqrt(|B||C|)), (L - |B|d') n / (2 d |B||C|) }.
inline double decomposition_lower_bound(double edges, double size_b, double size_c, double d, double dprime,
                                        double lambda, double n) {
  if (edges < 0 || size_b < 0 || size_c < 0 || d < 0 || dprime < 0 || lambda < 0 || n < 0) {
    fail(ErrorCode::InvalidArgument, "arguments must be nonnegative");
  }
  if (lambda == 0.0 || d == 0.0) fail(ErrorCode::DivisionByZero, "lambda and d must be positive");
  if (size_b == 0.0 || size_c == 0.0) fail(ErrorCode::DivisionByZero, "|B| and |C| must be positive");
  const double excess = edges - size_b * dprime;
  const double spectral = excess / (2.0 * lambda * std::sqrt(size_b * size_c));
  const double density = excess * n / (2.0 * d * size_b * size_c);
  return std::min(spectral, density);
}

struct DecompositionReport {
  std::uint64_t size_a = 0;
  std::uint64_t size_b = 0;
  std::uint64_t size_c = 0;
  std::uint64_t n = 0;
  std::uint64_t edges = 0;            // L: edges of K from B to C
  std::uint64_t edges_plus = 0;       // with difference in A x A
  std::uint64_t edges_minus_only = 0; // with difference only in (-A) x (-A)
  std::vector<Elem> bad;              // a with P - a containing a linear factor
  std::uint64_t dprime = 0;           // out-degree of H_0 (union of bad G_a)
  std::uint64_t d = 0;                // max out-degree of good G_a
  double lambda = 0.0;                // max lambda(G_a) over good a
  double lower_bound = 0.0;
  std::uint64_t touched_good = 0;     // good a whose G_a carries an edge of K from B to C
  std::uint64_t touched_bad = 0;
  std::uint64_t image_size = 0;       // |P(A)|
  std::uint64_t image_good = 0;       // |P(A) \ bad|
  std::uint64_t reachable_good = 0;   // good a with Root(P - a) meeting (A x A) u (-A x -A)
};

inline constexpr std::uint64_t kMaxDecompositionWork = 100000000;
inline constexpr std::uint32_t kMaxDecompositionOrder = 503;

/// Counting harness for the sum-product argument. B = A x A,
/// C = (A+A) x (A+A), K has an edge x -> y iff y - x in (A x A) u (-A x -A).
/// Each edge of K lies in exactly one G_a, a = P(y - x); the report compares
/// how many good G_a are touched with the decomposition lower bound.
inline DecompositionReport decomposition_count(const BiPoly& p, std::span<const Elem> a_in) {
  const RingCtx& ctx = p.ctx();
  detail::require_field(ctx, "decomposition_count");
  const auto bad = bad_set(p);  // throws DegenerateInput
  std::vector<Elem> a(a_in.begin(), a_in.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) fail(ErrorCode::InvalidArgument, "A must be nonempty");
  const std::uint64_t na = a.size();
  if (na * na * na * na > kMaxDecompositionWork) fail(ErrorCode::TooLarge, "|A|^4 exceeds 10^8");
  if (ctx.order() > kMaxDecompositionOrder) fail(ErrorCode::TooLarge, "field too large for all-a spectra");

  const std::uint32_t q = ctx.order();
  auto vid = [q](Point x) { return static_cast<std::size_t>(x.x1.value) * q + x.x2.value; };

  std::vector<bool> is_bad(q, false);
  for (const auto e : bad) is_bad[e.value] = true;

  // Differences: A x A first, then (-A) x (-A) not already present.
  std::vector<Point> diffs;
  std::vector<bool> seen(static_cast<std::size_t>(q) * q, false);
  for (const auto u : a) {
    for (const auto v : a) {
      diffs.push_back({u, v});
      seen[vid({u, v})] = true;
    }
  }
  const std::size_t plus_count = diffs.size();
  for (const auto u : a) {
    for (const auto v : a) {
      const Point m{ctx.neg(u), ctx.neg(v)};
      if (!seen[vid(m)]) {
        diffs.push_back(m);
        seen[vid(m)] = true;
      }
    }
  }

  std::vector<bool> in_sum(q, false);
  for (const auto u : a) {
    for (const auto v : a) in_sum[ctx.add(u, v).value] = true;
  }
  std::vector<Elem> b_coords = a;

  DecompositionReport r;
  r.size_a = na;
  r.size_b = na * na;
  const auto sum_size = static_cast<std::uint64_t>(std::count(in_sum.begin(), in_sum.end(), true));
  r.size_c = sum_size * sum_size;
  r.n = static_cast<std::uint64_t>(q) * q;
  r.bad = bad;

  std::vector<Elem> level(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) level[i] = p(diffs[i]);

  std::vector<bool> touched(q, false);
  for (const auto u : b_coords) {
    for (const auto v : b_coords) {
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        const Elem y1 = ctx.add(u, diffs[i].x1);
        const Elem y2 = ctx.add(v, diffs[i].x2);
        if (!in_sum[y1.value] || !in_sum[y2.value]) continue;
        ++r.edges;
        if (i < plus_count) {
          ++r.edges_plus;
        } else {
          ++r.edges_minus_only;
        }
        touched[level[i].value] = true;
      }
    }
  }

  std::vector<bool> reachable(q, false);
  for (std::size_t i = 0; i < diffs.size(); ++i) reachable[level[i].value] = true;
  std::set<Elem> image;
  for (std::size_t i = 0; i < plus_count; ++i) image.insert(level[i]);
  r.image_size = image.size();
  for (const auto e : image) r.image_good += is_bad[e.value] ? 0 : 1;
  for (std::uint32_t v = 0; v < q; ++v) {
    if (touched[v]) (is_bad[v] ? r.touched_bad : r.touched_good) += 1;
    if (reachable[v] && !is_bad[v]) ++r.reachable_good;
  }

  // Degrees and spectral gaps of all G_a.
  std::vector<std::uint64_t> degree(q, 0);
  std::vector<double> gap(q, 0.0);
  detail::parallel_chunks(q, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) {
      if (is_bad[v]) {
        degree[v] = root_set(p.minus_constant(Elem{static_cast<std::uint32_t>(v)})).size();
        continue;
      }
      const auto g = CayleyDigraph::from_level_set(p, Elem{static_cast<std::uint32_t>(v)});
      degree[v] = g.degree();
      gap[v] = spectrum(g).lambda;
    }
  }, 1);
  for (std::uint32_t v = 0; v < q; ++v) {
    if (is_bad[v]) {
      r.dprime += degree[v];
    } else {
      r.d = std::max(r.d, degree[v]);
      r.lambda = std::max(r.lambda, gap[v]);
    }
  }

  if (r.edges < na * na * na * na) fail(ErrorCode::TheoremViolation, "L is below |A|^4");
  if (r.touched_good > r.reachable_good) fail(ErrorCode::TheoremViolation, "touched more G_a than reachable");
  if (r.touched_good < r.image_good) fail(ErrorCode::TheoremViolation, "an A x A edge class was not counted");
  r.lower_bound = decomposition_lower_bound(static_cast<double>(r.edges), static_cast<double>(r.size_b),
                                            static_cast<double>(r.size_c), static_cast<double>(r.d),
                                            static_cast<double>(r.dprime), r.lambda, static_cast<double>(r.n));
  if (r.lower_bound > 0 && static_cast<double>(r.touched_good) < std::ceil(r.lower_bound - 1e-9)) {
    fail(ErrorCode::TheoremViolation, "fewer good parts touched than the decomposition bound");
  }
  return r;
}

}  // namespace sumprod
