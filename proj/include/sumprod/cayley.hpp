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

// Directed Cayley graphs on the plane H = R^2 and their spectra. The
// eigenvalue attached to the character chi_xi is sum_{s in S} chi_xi(s),
// with eigenvector (chi_xi(x))_{x in H}.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "sumprod/algebra.hpp"
#include "sumprod/bipoly.hpp"
#include "sumprod/detail/parallel.hpp"
#include "sumprod/dft.hpp"
#include "sumprod/error.hpp"

namespace sumprod {

/// Vertex id of x in H: x1 * order + x2.
using Vertex = std::uint32_t;

inline constexpr std::uint64_t kMaxOracleVertices = 10000;

class CayleyDigraph {
 public:
  /// Edge x -> y iff y - x in S. Duplicate generators are merged.
  static CayleyDigraph build(RingCtx ctx, std::vector<Point> generators) {
    const std::uint64_t q = ctx.order();
    if (q * q > kMaxPlaneSize) fail(ErrorCode::TooLarge, "vertex count exceeds 2^24");
    for (const auto& s : generators) {
      if (s.x1.value >= q || s.x2.value >= q) fail(ErrorCode::InvalidArgument, "generator outside H");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    return CayleyDigraph(std::move(ctx), std::move(generators));
  }

  /// G_a: generators Root(P - a).
  static CayleyDigraph from_level_set(const BiPoly& p, Elem a) {
    return build(p.ctx(), root_set(p.minus_constant(a)));
  }

  const RingCtx& ctx() const noexcept { return ctx_; }
  const std::vector<Point>& generators() const noexcept { return generators_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t degree() const noexcept { return generators_.size(); }

  Vertex index(Point x) const noexcept { return x.x1.value * ctx_.order() + x.x2.value; }
  Point point(Vertex v) const noexcept { return {Elem{v / ctx_.order()}, Elem{v % ctx_.order()}}; }

  Point add(Point a, Point b) const noexcept { return {ctx_.add(a.x1, b.x1), ctx_.add(a.x2, b.x2)}; }
  Point sub(Point a, Point b) const noexcept { return {ctx_.sub(a.x1, b.x1), ctx_.sub(a.x2, b.x2)}; }

  bool is_generator(Point s) const noexcept { return generator_mask_[index(s)]; }
  bool has_edge(Point x, Point y) const noexcept { return is_generator(sub(y, x)); }

  /// x + S.
  std::vector<Point> neighbors_out(Point x) const {
    std::vector<Point> out;
    out.reserve(generators_.size());
    for (const auto& s : generators_) out.push_back(add(x, s));
    return out;
  }

  /// x - S.
  std::vector<Point> neighbors_in(Point x) const {
    std::vector<Point> out;
    out.reserve(generators_.size());
    for (const auto& s : generators_) out.push_back(sub(x, s));
    return out;
  }

 private:
  CayleyDigraph(RingCtx ctx, std::vector<Point> generators)
      : ctx_(std::move(ctx)), generators_(std::move(generators)) {
    n_ = static_cast<std::size_t>(ctx_.order()) * ctx_.order();
    generator_mask_.assign(n_, false);
    for (const auto& s : generators_) generator_mask_[index(s)] = true;
  }

  RingCtx ctx_;
  std::vector<Point> generators_;
  std::size_t n_ = 0;
  std::vector<bool> generator_mask_;
};

/// Explicit digraph with adjacency lists; used by the oracles.
class Digraph {
 public:
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  void add_edge(Vertex u, Vertex v) {
    out_.at(u).push_back(v);
    in_.at(v).push_back(u);
  }

  std::size_t vertex_count() const noexcept { return out_.size(); }
  const std::vector<Vertex>& out(Vertex u) const { return out_[u]; }
  const std::vector<Vertex>& in(Vertex u) const { return in_[u]; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

inline Digraph to_digraph(const CayleyDigraph& g) {
  if (g.vertex_count() > kMaxOracleVertices) fail(ErrorCode::TooLarge, "explicit adjacency needs n <= 10^4");
  Digraph d(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const auto& y : g.neighbors_out(g.point(v))) d.add_edge(v, g.index(y));
  }
  return d;
}

struct NormalityResult {
  bool normal = true;
  /// First pair (x, y) with |N+(x,y)| != |N-(x,y)|.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::uint64_t plus_count = 0;
  std::uint64_t minus_count = 0;
  std::uint64_t pairs_checked = 0;
};

/// |N+(x,y)| = |N-(x,y)| for all pairs, where N+ are common out-neighbours
/// and N- common in-neighbours. O(n d^2).
inline NormalityResult is_normal(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  NormalityResult result;
  std::vector<std::int64_t> diff(n, 0);
  std::vector<std::uint64_t> plus(n, 0);
  std::vector<Vertex> touched;
  for (Vertex x = 0; x < n; ++x) {
    touched.clear();
    auto touch = [&](Vertex y) {
      if (diff[y] == 0 && plus[y] == 0) touched.push_back(y);
    };
    for (const Vertex z : g.out(x)) {
      for (const Vertex y : g.in(z)) {
        touch(y);
        ++diff[y];
        ++plus[y];
      }
    }
    for (const Vertex z : g.in(x)) {
      for (const Vertex y : g.out(z)) {
        touch(y);
        --diff[y];
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (const Vertex y : touched) {
      if (diff[y] != 0 && result.normal) {
        result.normal = false;
        result.witness = {x, y};
        result.plus_count = plus[y];
        result.minus_count = static_cast<std::uint64_t>(static_cast<std::int64_t>(plus[y]) - diff[y]);
      }
      diff[y] = 0;
      plus[y] = 0;
    }
    result.pairs_checked += n;
    if (!result.normal) break;
  }
  return result;
}

struct NormalityMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static NormalityMode exhaustive() { return {}; }
  static NormalityMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::Sampled, count, seed}; }
};

/// Normality of a Cayley digraph. Exhaustive mode goes through the explicit
/// adjacency (n <= 10^4); sampled mode counts common neighbours of random
/// pairs from the implicit adjacency.
inline NormalityResult is_normal(const CayleyDigraph& g, NormalityMode mode = NormalityMode::exhaustive()) {
  if (mode.kind == NormalityMode::Kind::Exhaustive) return is_normal(to_digraph(g));
  NormalityResult result;
  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const Point x = g.point(pick(rng));
    const Point y = g.point(pick(rng));
    std::uint64_t plus = 0, minus = 0;
    for (const auto& z : g.neighbors_out(x)) plus += g.has_edge(y, z) ? 1 : 0;
    for (const auto& z : g.neighbors_in(x)) minus += g.has_edge(z, y) ? 1 : 0;
    ++result.pairs_checked;
    if (plus != minus) {
      result.normal = false;
      result.witness = {g.index(x), g.index(y)};
      result.plus_count = plus;
      result.minus_count = minus;
      break;
    }
  }
  return result;
}

enum class SpectrumMethod { Direct, Transform };

/// All eigenvalues lambda_xi, indexed by the vertex id of xi.
struct Spectrum {
  RingCtx ctx;
  std::vector<Complex> values;
  std::size_t degree = 0;
  /// max over xi != 0 of |lambda_xi|.
  double lambda = 0.0;
  Point lambda_at{};

  const Complex& operator[](Point xi) const noexcept { return values[xi.x1.value * ctx.order() + xi.x2.value]; }
};

/// sum_{s in S} chi_xi(s).
inline Complex eigenvalue(const CayleyDigraph& g, Point xi) {
  Complex acc{};
  for (const auto& s : g.generators()) acc += g.ctx().character(xi, s);
  return acc;
}

namespace detail {

inline std::vector<Complex> spectrum_direct(const CayleyDigraph& g) {
  std::vector<Complex> values(g.vertex_count());
  parallel_chunks(values.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) values[v] = eigenvalue(g, g.point(static_cast<Vertex>(v)));
  });
  return values;
}

// Indicator of S transformed along every coordinate axis of H viewed as
// Z_m x Z_m or Z_p^{2r}; the trace pairing is applied when reading back.
inline std::vector<Complex> spectrum_transform(const CayleyDigraph& g) {
  const RingCtx& ctx = g.ctx();
  std::vector<Complex> f(g.vertex_count(), Complex{});
  for (const auto& s : g.generators()) f[g.index(s)] = 1.0;
  std::vector<DftAxis> axes;
  if (ctx.kind() == RingKind::ExtensionField) {
    std::size_t stride = 1;
    for (unsigned i = 0; i < 2 * ctx.degree(); ++i, stride *= ctx.characteristic()) {
      axes.push_back({ctx.characteristic(), stride});
    }
  } else {
    axes.push_back({ctx.order(), 1});
    axes.push_back({ctx.order(), ctx.order()});
  }
  dft_axes(f, axes, +1);
  if (ctx.kind() != RingKind::ExtensionField) return f;
  std::vector<Complex> values(f.size());
  for (Vertex v = 0; v < values.size(); ++v) {
    const Point xi = g.point(v);
    values[v] = f[g.index({ctx.trace_dual(xi.x1), ctx.trace_dual(xi.x2)})];
  }
  return values;
}

}  // namespace detail

/// Relative tolerance of the trace / Frobenius-norm identities.
inline constexpr double kSpectrumIdentityTolerance = 1e-8;

/// Trace: sum_xi lambda_xi = n [0 in S]. Frobenius: sum_xi |lambda_xi|^2 = n |S|.
/// Also lambda_0 = d and |lambda_xi| <= d.
inline void check_spectrum_identities(const CayleyDigraph& g, const Spectrum& spec) {
  const double n = static_cast<double>(g.vertex_count());
  const double d = static_cast<double>(g.degree());
  const double scale = std::max(1.0, n * d);
  Complex trace{};
  double frobenius = 0.0;
  for (const auto& v : spec.values) {
    trace += v;
    frobenius += std::norm(v);
    if (std::abs(v) > d + kSpectrumIdentityTolerance * std::max(1.0, d)) {
      fail(ErrorCode::TheoremViolation, "eigenvalue modulus exceeds the degree");
    }
  }
  const double expected_trace = g.is_generator({}) ? n : 0.0;
  if (std::abs(trace - expected_trace) > kSpectrumIdentityTolerance * scale) {
    fail(ErrorCode::TheoremViolation, "spectrum trace identity failed");
  }
  if (std::abs(frobenius - n * d) > kSpectrumIdentityTolerance * scale) {
    fail(ErrorCode::TheoremViolation, "spectrum Frobenius-norm identity failed");
  }
  if (std::abs(spec.values[0] - d) > kSpectrumIdentityTolerance * std::max(1.0, d)) {
    fail(ErrorCode::TheoremViolation, "trivial eigenvalue differs from the degree");
  }
}

inline Spectrum spectrum(const CayleyDigraph& g, SpectrumMethod method = SpectrumMethod::Transform) {
  Spectrum spec{g.ctx(), {}, g.degree(), 0.0, {}};
  spec.values = method == SpectrumMethod::Direct ? detail::spectrum_direct(g) : detail::spectrum_transform(g);
  for (Vertex v = 1; v < spec.values.size(); ++v) {
    const double mag = std::abs(spec.values[v]);
    if (mag > spec.lambda) {
      spec.lambda = mag;
      spec.lambda_at = g.point(v);
    }
  }
  check_spectrum_identities(g, spec);
  return spec;
}

/// ||A v - lambda v||_inf for v = (chi_xi(x))_x, applying the adjacency
/// explicitly: (A v)_y = sum over out-neighbours z of y of v_z.
inline double eigen_residual(const CayleyDigraph& g, Point xi, Complex lambda) {
  if (g.vertex_count() > kMaxOracleVertices) fail(ErrorCode::TooLarge, "residual oracle needs n <= 10^4");
  const RingCtx& ctx = g.ctx();
  double worst = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Point y = g.point(v);
    Complex av{};
    for (const auto& z : g.neighbors_out(y)) av += ctx.character(xi, z);
    worst = std::max(worst, std::abs(av - lambda * ctx.character(xi, y)));
  }
  return worst;
}

/// Residual with lambda_xi from the direct character sum.
inline double eigen_residual_oracle(const CayleyDigraph& g, Point xi) {
  return eigen_residual(g, xi, eigenvalue(g, xi));
}

}  // namespace sumprod
