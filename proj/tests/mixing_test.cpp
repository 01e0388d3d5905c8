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
#include <set>

#include "sumprod/mixing.hpp"
#include "sumprod/parser.hpp"

namespace sumprod {
namespace {

std::vector<Point> random_subset(const CayleyDigraph& g, std::mt19937_64& rng) {
  std::vector<Point> out;
  const std::size_t size = 1 + rng() % g.vertex_count();
  for (std::size_t i = 0; i < size; ++i) out.push_back(g.point(static_cast<Vertex>(rng() % g.vertex_count())));
  return out;
}

// Brute-force e(B, C) over all pairs.
std::uint64_t brute_edges(const CayleyDigraph& g, const std::vector<Point>& b, const std::vector<Point>& c) {
  const std::set<Point> bs(b.begin(), b.end()), cs(c.begin(), c.end());
  std::uint64_t total = 0;
  for (const auto& x : bs) {
    for (const auto& y : cs) total += g.has_edge(x, y);
  }
  return total;
}

CayleyDigraph hyperbola(std::uint64_t q, std::uint32_t a) {
  return CayleyDigraph::from_level_set(parse_poly("x1*x2", RingCtx::prime_field(q)), Elem{a});
}

TEST(CountEdges, Examples) {
  const auto g = hyperbola(5, 1);
  std::vector<Point> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(g.point(v));
  EXPECT_EQ(count_edges(g, {}, all), 0u);
  EXPECT_EQ(count_edges(g, all, all), 25u * 4u);
  // (0,0) -> (1,1) is an edge (1 * 1 = 1); (1,1) -> (0,0) needs (-1)(-1) = 1, also an edge.
  const std::vector<Point> bc{{Elem{0}, Elem{0}}, {Elem{1}, Elem{1}}};
  EXPECT_EQ(count_edges(g, bc, bc), 2u);
  EXPECT_EQ(count_edges(g, bc, bc), brute_edges(g, bc, bc));
}

TEST(CountEdges, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (const auto& g : {hyperbola(7, 1), hyperbola(11, 3),
                        CayleyDigraph::build(RingCtx::modular(10), {{Elem{1}, Elem{2}}, {Elem{5}, Elem{5}}})}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto b = random_subset(g, rng), c = random_subset(g, rng);
      ASSERT_EQ(count_edges(g, b, c), brute_edges(g, b, c));
    }
  }
}

TEST(Mixing, WholeSpaceAndEdgeless) {
  const auto g = hyperbola(7, 1);
  std::vector<Point> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(g.point(v));
  const auto r = mixing_check(g, spectrum(g), all, all);
  EXPECT_NEAR(r.defect, 0.0, 1e-9);
  EXPECT_TRUE(r.holds);

  const auto empty = CayleyDigraph::build(RingCtx::prime_field(7), {});
  const auto e = mixing_check(empty, spectrum(empty), all, {all.begin(), all.begin() + 5});
  EXPECT_EQ(e.defect, 0.0);
  EXPECT_EQ(e.bound, 0.0);
  EXPECT_TRUE(e.holds);
}

TEST(Mixing, RandomPairsHold) {
  std::mt19937_64 rng(32);
  for (const auto& g : {hyperbola(7, 1), hyperbola(13, 2),
                        CayleyDigraph::build(RingCtx::modular(9), {{Elem{1}, Elem{0}}, {Elem{2}, Elem{7}}, {Elem{4}, Elem{4}}})}) {
    const auto spec = spectrum(g);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto r = mixing_check(g, spec, random_subset(g, rng), random_subset(g, rng));
      ASSERT_TRUE(r.holds);
      ASSERT_LE(r.square_deviation, r.square_bound + 1e-6 * std::max(1.0, r.square_bound));
    }
  }
}

TEST(Mixing, UnderstatedLambdaIsCaught) {
  const auto g = hyperbola(7, 1);
  auto spec = spectrum(g);
  spec.lambda = 0.0;
  const std::vector<Point> b{{Elem{0}, Elem{0}}};
  EXPECT_THROW(mixing_check(g, spec, b, b), Error);
}

TEST(DecompositionBound, Examples) {
  EXPECT_DOUBLE_EQ(decomposition_lower_bound(100, 10, 10, 10, 0, 2, 100), 2.5);
  EXPECT_DOUBLE_EQ(decomposition_lower_bound(30, 10, 10, 10, 3, 2, 100), 0.0);
  EXPECT_LT(decomposition_lower_bound(20, 10, 10, 10, 3, 2, 100), 0.0);
  for (const auto& args : std::vector<std::array<double, 2>>{{0.0, 1.0}, {1.0, 0.0}}) {
    try {
      decomposition_lower_bound(100, 10, 10, args[1], 0, args[0], 100);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
  }
  EXPECT_THROW(decomposition_lower_bound(-1, 10, 10, 10, 0, 2, 100), Error);
}

TEST(DecompositionBound, MonotoneInEdgesAndLambda) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.1, 100.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double l = u(rng) * 100, b = u(rng), c = u(rng), d = u(rng), dp = u(rng) * 0.1, lam = u(rng), n = u(rng) * 100;
    const double base = decomposition_lower_bound(l, b, c, d, dp, lam, n);
    ASSERT_GE(decomposition_lower_bound(l + u(rng), b, c, d, dp, lam, n), base);
    const double tighter = decomposition_lower_bound(l, b, c, d, dp, lam + u(rng), n);
    if (base >= 0) {
      ASSERT_LE(tighter, base);
    } else {
      ASSERT_GE(tighter, base);  // a vacuous bound moves toward zero
    }
  }
}

TEST(Decomposition, SmallHarness) {
  const auto ctx = RingCtx::prime_field(31);
  const auto p = parse_poly("x1*x2", ctx);
  const std::vector<Elem> a{Elem{1}, Elem{2}, Elem{3}};
  const auto r = decomposition_count(p, a);
  EXPECT_GE(r.edges, 81u);
  EXPECT_EQ(r.image_size, 6u);  // {1, 2, 3, 4, 6, 9}
  EXPECT_EQ(r.image_good, 6u);
  EXPECT_GE(r.touched_good, r.image_good);
  EXPECT_LE(r.touched_good, r.reachable_good);
  EXPECT_EQ(r.bad, std::vector<Elem>{Elem{0}});
  EXPECT_EQ(r.size_b, 9u);
  EXPECT_EQ(r.size_c, 25u);
  EXPECT_EQ(r.d, 30u);
  EXPECT_EQ(r.dprime, 61u);  // |Root(x1 x2)| = 2q - 1
  if (r.lower_bound > 0) EXPECT_GE(static_cast<double>(r.touched_good), std::ceil(r.lower_bound - 1e-9));
}

TEST(Decomposition, SingletonSet) {
  const auto ctx = RingCtx::prime_field(31);
  const auto r = decomposition_count(parse_poly("x1*x2", ctx), std::vector<Elem>{Elem{1}});
  EXPECT_GE(r.edges, 1u);
  EXPECT_GE(r.touched_good, 1u);
  EXPECT_EQ(r.image_size, 1u);
}

TEST(Decomposition, Errors) {
  const auto ctx = RingCtx::prime_field(31);
  try {
    decomposition_count(parse_poly("x1+x2", ctx), std::vector<Elem>{Elem{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
  std::vector<Elem> big;
  for (std::uint32_t v = 1; v <= 101; ++v) big.push_back(Elem{v});
  try {
    decomposition_count(parse_poly("x1*x2", RingCtx::prime_field(211)), big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

}  // namespace
}  // namespace sumprod
