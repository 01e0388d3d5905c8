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

#include "sumprod/corpus.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/parser.hpp"

namespace sumprod {
namespace {

std::vector<Elem> elems(std::initializer_list<std::uint32_t> values) {
  std::vector<Elem> out;
  for (const auto v : values) out.push_back(Elem{v});
  return out;
}

TEST(SetSpec, ParseAndGenerate) {
  const auto f101 = RingCtx::prime_field(101);
  EXPECT_EQ(generate(SetSpec::parse("interval:4"), f101), elems({1, 2, 3, 4}));
  EXPECT_EQ(generate(SetSpec::parse("ap:100:5:3"), f101), elems({4, 9, 100}));
  EXPECT_EQ(generate(SetSpec::parse("geometric:3:4"), f101), elems({1, 3, 9, 27}));
  EXPECT_EQ(generate(SetSpec::parse("list:7,5,100"), f101), elems({5, 7, 100}));
  EXPECT_THROW(generate(SetSpec::parse("list:5,7,102"), f101), Error);
  const auto r = generate(SetSpec::parse("random:20:seed=7"), f101);
  EXPECT_EQ(r.size(), 20u);
  EXPECT_EQ(r, generate(SetSpec::random(20, 7), f101));
  EXPECT_NE(r, generate(SetSpec::random(20, 8), f101));
  EXPECT_EQ(SetSpec::parse("random:20", 9).seed, 9u);
  EXPECT_EQ(SetSpec::parse("random:20:seed=7").to_string(), "random:20:seed=7");
  for (const auto bad : {"interval", "interval:x", "ap:1:2", "nope:3", "random:-1", "list:1,,2"}) {
    EXPECT_THROW(SetSpec::parse(bad), Error) << bad;
  }
}

TEST(SetSpec, CollisionsAndSizesRejected) {
  const auto f7 = RingCtx::prime_field(7);
  EXPECT_THROW(generate(SetSpec::interval(8), f7), Error);
  EXPECT_THROW(generate(SetSpec::geometric(2, 4), f7), Error);  // 2^3 = 1
  EXPECT_THROW(generate(SetSpec::random(8, 1), f7), Error);
  EXPECT_THROW(generate(SetSpec::explicit_set({1, 8}), f7), Error);
  EXPECT_EQ(generate(SetSpec::random(7, 1), f7).size(), 7u);
}

TEST(SetSpec, Subfields) {
  const auto f9 = RingCtx::extension_field(3, 2);
  EXPECT_EQ(generate(SetSpec::subfield(), f9), elems({0, 1, 2}));
  EXPECT_EQ(generate(SetSpec::subfield(2), f9).size(), 9u);
  const auto f16 = RingCtx::extension_field(2, 4);
  EXPECT_EQ(generate(SetSpec::subfield(2), f16).size(), 4u);
  EXPECT_THROW(generate(SetSpec::subfield(3), f16), Error);
  EXPECT_THROW(generate(SetSpec::subfield(), RingCtx::modular(9)), Error);
}

TEST(PointSets, Generators) {
  const auto f5 = RingCtx::prime_field(5);
  EXPECT_EQ(generate_points({"plane"}, f5).size(), 25u);
  EXPECT_EQ(generate_points({"grid:3"}, f5).size(), 9u);
  EXPECT_EQ(generate_points({"random:10:seed=3"}, f5).size(), 10u);
  const auto pts = generate_points({"pts:1,2;3,4;1,2"}, f5);
  EXPECT_EQ(pts, (std::vector<Point>{{Elem{1}, Elem{2}}, {Elem{3}, Elem{4}}}));
  EXPECT_THROW(generate_points({"pts:1"}, f5), Error);
  EXPECT_THROW(generate_points({"random:26"}, f5), Error);
}

TEST(SetOps, Examples) {
  const auto f101 = RingCtx::prime_field(101);
  const auto a = elems({1, 2, 3});
  EXPECT_EQ(sumset(f101, a).size(), 5u);
  EXPECT_EQ(image_set(parse_poly("2*x1+3*x2", f101), a).size(), 9u);
  const auto one = elems({4});
  EXPECT_EQ(sumset(f101, one).size(), 1u);
  EXPECT_EQ(productset(f101, one).size(), 1u);
  EXPECT_EQ(image_set(parse_poly("x1^2 + x1*x2", f101), one).size(), 1u);
  std::vector<Elem> big(10001, Elem{0});
  EXPECT_THROW(sumset(f101, big), Error);
}

TEST(SetOps, IntervalIdentities) {
  const auto ctx = RingCtx::prime_field(1009);
  const auto p1 = parse_poly("2*x1 + 3*x2", ctx);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const auto a = generate(SetSpec::interval(n), ctx);
    EXPECT_EQ(sumset(ctx, a).size(), 2 * n - 1);
    std::set<std::uint64_t> values;  // over the integers; no wraparound below 1009
    for (std::uint64_t x = 1; x <= n; ++x) {
      for (std::uint64_t y = 1; y <= n; ++y) values.insert(2 * x + 3 * y);
    }
    EXPECT_EQ(image_set(p1, a).size(), values.size());
    if (n >= 3) EXPECT_EQ(values.size(), 5 * n - 6);
  }
}

TEST(SetOps, ImageOfProductIsProductSet) {
  std::mt19937_64 rng(51);
  const auto ctx = RingCtx::prime_field(101);
  const auto xy = parse_poly("x1*x2", ctx);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = generate(SetSpec::random(1 + rng() % 40, rng()), ctx);
    EXPECT_EQ(image_set(xy, a), productset(ctx, a));
  }
}

TEST(Symmetry, ParityAndFallback) {
  const auto f7 = RingCtx::prime_field(7);
  EXPECT_TRUE(is_symmetric(parse_poly("x1^2 + x2^2", f7)));
  EXPECT_TRUE(is_symmetric(parse_poly("x1*x2 + 3", f7)));
  EXPECT_FALSE(is_symmetric(parse_poly("x1^2 + x2", f7)));
  // Characteristic 2: -x = x, so every polynomial is symmetric.
  EXPECT_TRUE(is_symmetric(parse_poly("x1^3 + x2", RingCtx::extension_field(2, 3))));
}

TEST(Distances, Examples) {
  const auto f5 = RingCtx::prime_field(5);
  const auto circle = parse_poly("x1^2 + x2^2", f5);
  EXPECT_EQ(distance_set(circle, generate_points({"plane"}, f5)).size(), 5u);
  const std::vector<Point> two{{Elem{0}, Elem{1}}, {Elem{2}, Elem{3}}};
  EXPECT_EQ(distance_set(circle, two).size(), 1u);
  // Non-symmetric P: both orientations contribute.
  const auto skew = parse_poly("x1 + x2^2", f5);
  const auto d = distance_set(skew, two);
  EXPECT_EQ(d.size(), 2u);
}

TEST(Distances, TranslationInvariant) {
  std::mt19937_64 rng(52);
  const auto ctx = RingCtx::prime_field(13);
  for (const auto text : {"x1^2 + x2^2", "x1*x2", "x1^3 + x2"}) {
    const auto p = parse_poly(text, ctx);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = generate_points({"random:" + std::to_string(1 + rng() % 40) + ":seed=" + std::to_string(rng() % 1000)}, ctx);
      const Point t{Elem{static_cast<std::uint32_t>(rng() % 13)}, Elem{static_cast<std::uint32_t>(rng() % 13)}};
      std::vector<Point> shifted;
      for (const auto& x : a) shifted.push_back({ctx.add(x.x1, t.x1), ctx.add(x.x2, t.x2)});
      ASSERT_EQ(distance_set(p, a), distance_set(p, shifted));
    }
  }
}

TEST(Theorem1, Examples) {
  const auto f101 = RingCtx::prime_field(101);
  const auto xy = parse_poly("x1*x2", f101);
  const auto a = generate(SetSpec::interval(10), f101);
  const auto c = theorem1_check(xy, a);
  EXPECT_EQ(c.lhs, std::max<std::uint64_t>(19, productset(f101, a).size()));
  EXPECT_NEAR(c.rhs_at_delta_1,
              10.0 * std::min(std::pow(100.0 / (16.0 * 101.0), 0.25), std::cbrt(101.0 / 20.0)), 1e-12);
  EXPECT_NEAR(c.empirical_delta, c.lhs / c.rhs_at_delta_1, 1e-12);
  EXPECT_FALSE(c.in_range());  // 10 < 4 sqrt(101)

  const auto s = theorem1_check(xy, elems({7}));
  EXPECT_EQ(s.lhs, 1u);
  EXPECT_TRUE(std::isfinite(s.empirical_delta));
  EXPECT_GT(s.empirical_delta, 0.0);

  try {
    theorem1_check(parse_poly("2*x1+3*x2", f101), a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(Theorem1, SubfieldIsFlaggedOutOfRange) {
  const auto ctx = RingCtx::extension_field(7, 2);
  const auto a = generate(SetSpec::subfield(), ctx);
  const auto c = theorem1_check(parse_poly("x1*x2", ctx), a);
  EXPECT_EQ(c.lhs, a.size());
  EXPECT_FALSE(c.in_range());
}

TEST(Theorem2, Examples) {
  const auto z91 = RingCtx::modular(91);
  const auto c = theorem2_check(z91, generate(SetSpec::interval(9), z91));
  EXPECT_EQ(c.lhs, std::max<std::uint64_t>(17, productset(z91, generate(SetSpec::interval(9), z91)).size()));
  EXPECT_NEAR(c.rhs_at_delta_1, 9.0 * std::min(std::pow(7.0, 0.25) * 3.0 / std::sqrt(91.0), std::cbrt(91.0 / 9.0)), 1e-12);
  EXPECT_FALSE(c.in_range());
  EXPECT_NE(c.note.find("small least prime factor"), std::string::npos);  // 7^2 < 91

  const auto z15 = RingCtx::modular(15);
  std::vector<Elem> everything;
  for (std::uint32_t v = 0; v < 15; ++v) everything.push_back(Elem{v});
  const auto full = theorem2_check(z15, everything);
  EXPECT_EQ(full.lhs, 15u);
  EXPECT_TRUE(full.in_range());
  EXPECT_NEAR(full.empirical_delta, 1.0, 1e-12);

  const auto f101 = RingCtx::modular(101);
  const auto r = theorem2_check(f101, generate(SetSpec::random(20, 3), f101));
  EXPECT_GT(r.empirical_delta, 0.0);

  const auto even = theorem2_check(RingCtx::modular(30), generate(SetSpec::interval(20), RingCtx::modular(30)));
  EXPECT_FALSE(even.in_range());
  EXPECT_NE(even.note.find("outside verified-bound regime"), std::string::npos);
  EXPECT_THROW(theorem2_check(RingCtx::prime_field(7), elems({1})), Error);
}

TEST(DistanceCheck, Examples) {
  const auto f5 = RingCtx::prime_field(5);
  const auto circle = parse_poly("x1^2 + x2^2", f5);
  const auto c = distance_check(circle, generate_points({"plane"}, f5));
  EXPECT_EQ(c.lhs, 5u);
  EXPECT_NEAR(c.rhs_at_delta_1, std::min(25.0 / (4.0 * std::sqrt(5.0)), 2.5), 1e-12);
  EXPECT_TRUE(c.in_range());

  const auto lone = distance_check(circle, std::vector<Point>{{Elem{1}, Elem{1}}});
  EXPECT_EQ(lone.lhs, 0u);
  EXPECT_EQ(lone.empirical_delta, 0.0);

  try {
    distance_check(parse_poly("x1^2 + x2", f5), std::vector<Point>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  try {
    distance_check(parse_poly("(x1 + x2)^2", f5), std::vector<Point>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(Calibration, MinimumOverInRange) {
  TheoremCheck a, b, c;
  a.regime = b.regime = Regime::InRange;
  a.empirical_delta = 0.7;
  b.empirical_delta = 1.3;
  c.empirical_delta = 0.1;  // out of range: ignored
  EXPECT_DOUBLE_EQ(calibrate_delta(std::vector<TheoremCheck>{a}), 0.7);
  EXPECT_DOUBLE_EQ(calibrate_delta(std::vector<TheoremCheck>{b, a, c}), 0.7);
  try {
    calibrate_delta(std::vector<TheoremCheck>{c});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyCorpus);
  }
}

TEST(Corpus, InRangeMembersNeverHaveZeroDelta) {
  for (const auto& c : corpus::theorem2_corpus(corpus::Split::Calibration)) {
    if (c.in_range()) EXPECT_GT(c.empirical_delta, 0.0) << c.input;
  }
}

}  // namespace
}  // namespace sumprod
