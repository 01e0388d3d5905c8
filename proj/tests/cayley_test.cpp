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


#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumprod/cayley.hpp"
#include "sumprod/parser.hpp"

namespace sumprod {
namespace {

std::vector<Point> random_generators(const RingCtx& ctx, std::size_t count, std::mt19937_64& rng) {
  std::vector<Point> s;
  for (std::size_t i = 0; i < count; ++i) {
    s.push_back({Elem{static_cast<std::uint32_t>(rng() % ctx.order())}, Elem{static_cast<std::uint32_t>(rng() % ctx.order())}});
  }
  return s;
}

// lambda_xi straight from the definition, without the library's characters.
Complex oracle_eigenvalue(const RingCtx& ctx, const std::vector<Point>& s, Point xi) {
  Complex acc{};
  const std::uint64_t p = ctx.characteristic();
  for (const auto& x : s) {
    if (ctx.kind() == RingKind::ExtensionField) {
      std::vector<std::uint64_t> f(ctx.irreducible().begin(), ctx.irreducible().end());
      const std::size_t r = ctx.degree();
      const auto a = oracle::ext_mul(oracle::unpack(xi.x1.value, p, r), oracle::unpack(x.x1.value, p, r), f, p);
      const auto b = oracle::ext_mul(oracle::unpack(xi.x2.value, p, r), oracle::unpack(x.x2.value, p, r), f, p);
      std::vector<std::uint64_t> dot(r);
      for (std::size_t i = 0; i < r; ++i) dot[i] = (a[i] + b[i]) % p;
      acc += oracle::e(static_cast<std::int64_t>(oracle::ext_trace(oracle::pack(dot, p), f, p)), p);
    } else {
      acc += oracle::e(static_cast<std::int64_t>(xi.x1.value * x.x1.value + xi.x2.value * x.x2.value), p);
    }
  }
  return acc;
}

TEST(Cayley, BuildExamples) {
  const auto f5 = RingCtx::prime_field(5);
  const auto empty = CayleyDigraph::build(f5, {});
  EXPECT_EQ(empty.degree(), 0u);
  EXPECT_EQ(empty.vertex_count(), 25u);

  std::vector<Point> all;
  for (std::uint32_t v = 0; v < 25; ++v) all.push_back(empty.point(v));
  const auto complete = CayleyDigraph::build(f5, all);
  EXPECT_EQ(complete.degree(), 25u);
  EXPECT_TRUE(complete.has_edge({Elem{3}, Elem{1}}, {Elem{3}, Elem{1}}));

  const auto g = CayleyDigraph::from_level_set(parse_poly("x1*x2", f5), Elem{1});
  EXPECT_EQ(g.degree(), 4u);
  EXPECT_EQ(g.vertex_count(), 25u);
  const Point x{Elem{2}, Elem{3}};
  for (const auto& y : g.neighbors_out(x)) EXPECT_TRUE(g.has_edge(x, y));
  for (const auto& y : g.neighbors_in(x)) EXPECT_TRUE(g.has_edge(y, x));

  EXPECT_THROW(CayleyDigraph::build(RingCtx::prime_field(4099), {}), Error);
  EXPECT_THROW(CayleyDigraph::build(f5, {{Elem{5}, Elem{0}}}), Error);
  EXPECT_EQ(CayleyDigraph::build(f5, {{Elem{1}, Elem{1}}, {Elem{1}, Elem{1}}}).degree(), 1u);
}

TEST(Cayley, HyperbolaSpectrumExample) {
  const auto f5 = RingCtx::prime_field(5);
  const auto g = CayleyDigraph::from_level_set(parse_poly("x1*x2", f5), Elem{1});
  for (const auto method : {SpectrumMethod::Direct, SpectrumMethod::Transform}) {
    const auto spec = spectrum(g, method);
    EXPECT_NEAR(spec.values[0].real(), 4.0, 1e-12);
    const auto at = spec[{Elem{1}, Elem{2}}];
    EXPECT_NEAR(at.real(), -3.2360679775, 1e-9);
    EXPECT_NEAR(at.imag(), 0.0, 1e-9);
    EXPECT_NEAR(spec.lambda, 3.2360679775, 1e-9);
    EXPECT_LE(spec.lambda, 2.0 * std::sqrt(5.0));
  }
}

TEST(Cayley, TransformAndDirectAgreeWithOracle) {
  std::mt19937_64 rng(21);
  for (const auto& ctx : {RingCtx::modular(2), RingCtx::modular(6), RingCtx::modular(15), RingCtx::prime_field(29),
                          RingCtx::extension_field(2, 2), RingCtx::extension_field(3, 2), RingCtx::extension_field(2, 3),
                          RingCtx::extension_field(5, 2)}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto g = CayleyDigraph::build(ctx, random_generators(ctx, 1 + rng() % 12, rng));
      const auto fast = spectrum(g, SpectrumMethod::Transform);
      const auto slow = spectrum(g, SpectrumMethod::Direct);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ASSERT_LT(std::abs(fast.values[v] - slow.values[v]), 1e-6) << ctx.describe();
        const auto expect = oracle_eigenvalue(ctx, g.generators(), g.point(v));
        ASSERT_LT(std::abs(fast.values[v] - expect), 1e-9) << ctx.describe() << " xi=" << v;
      }
      EXPECT_NEAR(fast.lambda, slow.lambda, 1e-6);
    }
  }
}

TEST(Cayley, SpectrumIdentitiesAndViolationDetection) {
  const auto ctx = RingCtx::modular(7);
  std::vector<Point> s{{Elem{0}, Elem{0}}, {Elem{1}, Elem{2}}, {Elem{3}, Elem{3}}};
  const auto g = CayleyDigraph::build(ctx, s);
  auto spec = spectrum(g);
  Complex trace{};
  for (const auto& v : spec.values) trace += v;
  EXPECT_NEAR(trace.real(), 49.0, 1e-9);
  spec.values[5] += 0.5;
  try {
    check_spectrum_identities(g, spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TheoremViolation);
  }
}

TEST(Cayley, EigenResiduals) {
  std::mt19937_64 rng(22);
  const auto z7 = RingCtx::modular(7);
  const auto g = CayleyDigraph::build(z7, random_generators(z7, 5, rng));
  const auto spec = spectrum(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    EXPECT_LE(eigen_residual(g, g.point(v), spec.values[v]), 1e-10);
    EXPECT_LE(eigen_residual_oracle(g, g.point(v)), 1e-10);
  }
  const auto edgeless = CayleyDigraph::build(z7, {});
  EXPECT_EQ(eigen_residual_oracle(edgeless, {Elem{1}, Elem{3}}), 0.0);
  EXPECT_LE(eigen_residual_oracle(g, {}), 1e-12);
  // A wrong eigenvalue is caught.
  EXPECT_GT(eigen_residual(g, {Elem{1}, Elem{0}}, spec[{Elem{1}, Elem{0}}] + 0.1), 0.05);
  EXPECT_THROW(eigen_residual_oracle(CayleyDigraph::build(RingCtx::modular(101), {}), {}), Error);
}

TEST(Normality, CayleyGraphsAreNormal) {
  std::mt19937_64 rng(23);
  for (const auto& ctx : {RingCtx::modular(5), RingCtx::modular(6), RingCtx::extension_field(2, 2)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto g = CayleyDigraph::build(ctx, random_generators(ctx, rng() % 9, rng));
      const auto exhaustive = is_normal(g);
      EXPECT_TRUE(exhaustive.normal);
      EXPECT_EQ(exhaustive.pairs_checked, g.vertex_count() * g.vertex_count());
      EXPECT_TRUE(is_normal(g, NormalityMode::sampled(500, trial)).normal);
    }
  }
}

TEST(Normality, PathIsNotNormal) {
  Digraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  const auto r = is_normal(path);
  ASSERT_FALSE(r.normal);
  ASSERT_TRUE(r.witness.has_value());
  const auto [x, y] = *r.witness;
  // Recount the witness from scratch.
  std::uint64_t plus = 0, minus = 0;
  for (Vertex z = 0; z < 3; ++z) {
    auto edge = [&](Vertex a, Vertex b) {
      return std::find(path.out(a).begin(), path.out(a).end(), b) != path.out(a).end();
    };
    plus += edge(x, z) && edge(y, z);
    minus += edge(z, x) && edge(z, y);
  }
  EXPECT_NE(plus, minus);
  EXPECT_EQ(r.plus_count, plus);
  EXPECT_EQ(r.minus_count, minus);
}

TEST(Normality, DiagonalPairHasDegreeOnBothSides) {
  const auto z5 = RingCtx::modular(5);
  const auto g = CayleyDigraph::build(z5, {{Elem{1}, Elem{0}}, {Elem{0}, Elem{2}}, {Elem{4}, Elem{4}}});
  const Point x{Elem{2}, Elem{2}};
  std::uint64_t plus = 0, minus = 0;
  for (const auto& z : g.neighbors_out(x)) plus += g.has_edge(x, z);
  for (const auto& z : g.neighbors_in(x)) minus += g.has_edge(z, x);
  EXPECT_EQ(plus, g.degree());
  EXPECT_EQ(minus, g.degree());
}

}  // namespace
}  // namespace sumprod
