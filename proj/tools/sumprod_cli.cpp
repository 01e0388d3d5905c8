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


// sumprod: command-line front end. Every command writes one report (JSON or
// CSV) and exits 0 on success, 1 on a usage error, 2 when the computation
// cannot run, 3 when a checked inequality fails.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "sumprod/sumprod.hpp"

namespace {

using namespace sumprod;
using cli::Json;
using cli::Report;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::optional<std::uint64_t> mod;
  std::string poly;
  std::string a = "1";
  std::string set;
  std::string points;
  std::uint64_t seed = config::kDefaultSeed;
  std::string out;
  std::string format = "json";
  std::optional<std::uint64_t> trials;
  std::uint64_t z = 1;
  std::string b = "1";
  std::string y = "1,0";
  std::string method = "transform";
  std::string irreducible;
  std::vector<std::uint64_t> m;
  std::string suite;
};

// ---------------------------------------------------------------------------
// Argument conversion

RingCtx ring(const Options& o) {
  if (!o.field.empty() && o.mod) throw UsageError("--field and --mod are exclusive");
  if (o.mod) {
    if (!o.irreducible.empty()) throw UsageError("--irreducible needs --field");
    return RingCtx::modular(*o.mod);
  }
  if (o.field.empty()) throw UsageError("one of --field or --mod is required");
  RingCtx ctx = parse_field(o.field);
  if (o.irreducible.empty()) return ctx;
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : detail::split(o.irreducible, ',')) coeffs.push_back(static_cast<std::uint32_t>(detail::to_uint(c)));
  if (coeffs.size() != ctx.degree() + 1) throw UsageError("--irreducible lists c_0..c_r");
  return RingCtx::extension_field(ctx.characteristic(), ctx.degree(), coeffs);
}

RingCtx field(const Options& o) {
  RingCtx ctx = ring(o);
  if (!ctx.is_field()) throw UsageError("this command needs --field");
  return ctx;
}

BiPoly poly(const Options& o, const RingCtx& ctx) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  return parse_poly(o.poly, ctx);
}

// Nonnegative values are element indices (strict); negatives map through Z.
Elem element(const std::string& text, const RingCtx& ctx) {
  const std::int64_t v = detail::to_int(text);
  return v >= 0 ? ctx.element(static_cast<std::uint64_t>(v)) : ctx.from_int(v);
}

Point point(const std::string& text, const RingCtx& ctx) {
  const auto xy = detail::split(text, ',');
  if (xy.size() != 2) throw UsageError("a point is written X,Y");
  return {element(xy[0], ctx), element(xy[1], ctx)};
}

std::vector<Elem> set_of(const Options& o, const RingCtx& ctx, const std::string& fallback = {}) {
  const std::string text = o.set.empty() ? fallback : o.set;
  if (text.empty()) throw UsageError("--set is required");
  return generate(SetSpec::parse(text, o.seed), ctx);
}

Json elems(const RingCtx& ctx, std::span<const Elem> xs) {
  Json out = Json::array();
  for (const auto x : xs) out.push_back(Report::elem(ctx, x));
  return out;
}

void ring_inputs(Report& r, const RingCtx& ctx) {
  r.inputs()["ring"] = ctx.describe();
  if (ctx.kind() == RingKind::ExtensionField) {
    r.inputs()["irreducible"] = ctx.irreducible();
  }
}

// ---------------------------------------------------------------------------
// Commands

void cmd_spectrum(const Options& o, Report& r) {
  const RingCtx ctx = ring(o);
  const BiPoly p = poly(o, ctx);
  const Elem a = element(o.a, ctx);
  if (o.method != "transform" && o.method != "direct") throw UsageError("--method is transform or direct");
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  r.inputs()["a"] = Report::elem(ctx, a);
  r.inputs()["method"] = o.method;

  const auto g = CayleyDigraph::from_level_set(p, a);
  const auto spec = spectrum(g, o.method == "direct" ? SpectrumMethod::Direct : SpectrumMethod::Transform);
  const double n = static_cast<double>(g.vertex_count());
  const double d = static_cast<double>(g.degree());
  Complex trace{};
  double frob = 0.0;
  for (const auto& v : spec.values) {
    trace += v;
    frob += std::norm(v);
  }
  auto& res = r.results();
  res["vertices"] = g.vertex_count();
  res["degree"] = g.degree();
  res["lambda"] = spec.lambda;
  res["lambda_at"] = Report::point(ctx, spec.lambda_at);
  res["lambda_over_sqrt_q"] = spec.lambda / std::sqrt(double(ctx.order()));
  res["trivial_eigenvalue"] = Report::complex(spec.values[0]);

  const double tol = kSpectrumIdentityTolerance * std::max(1.0, n * d);
  r.check("trivial eigenvalue = degree", spec.values[0].real(), d, std::abs(spec.values[0] - d) <= tol);
  r.check("trace identity", trace.real(), g.is_generator({}) ? n : 0.0,
          std::abs(trace - (g.is_generator({}) ? n : 0.0)) <= tol);
  r.check("Frobenius norm identity", frob, n * d, std::abs(frob - n * d) <= tol);

  if (ctx.is_field() && p.degree() < ctx.order()) {
    const auto factor = has_linear_factor(p.minus_constant(a));
    res["linear_factor"] = factor ? Json(factor->to_string()) : Json(nullptr);
    if (!factor) {
      const double ratio = spec.lambda / (double(p.degree()) * p.degree() * std::sqrt(double(ctx.order())));
      res["weil_ratio"] = ratio;
      r.check("lambda / (k^2 sqrt q) <= pinned threshold", ratio, config::kWeilRatioThreshold,
              ratio <= config::kWeilRatioThreshold);
    }
  }
}

void cmd_degeneracy(const Options& o, Report& r) {
  const RingCtx ctx = field(o);
  const BiPoly p = poly(o, ctx);
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  const auto result = degeneracy_test(p);
  auto& res = r.results();
  res["degenerate"] = result.degenerate();
  if (result.degenerate()) {
    const auto& dec = *result.decomposition;
    res["Q"] = dec.q.to_string("z");
    res["L"] = dec.l.to_string();
    r.check("Q(L) = P", 1, 1, compose(dec.q, dec.l) == p);
    return;
  }
  const auto bad = bad_set(p);
  res["bad_set"] = elems(ctx, bad);
  r.check("|bad set| <= k - 1", double(bad.size()), double(p.degree()) - 1, bad.size() + 1 <= p.degree());
}

std::vector<Point> random_points(std::mt19937_64& rng, std::uint64_t q) {
  std::uniform_int_distribution<std::uint64_t> size(1, q * q), coord(0, q - 1);
  std::vector<Point> out(size(rng));
  for (auto& x : out) {
    x = {Elem{static_cast<std::uint32_t>(coord(rng))}, Elem{static_cast<std::uint32_t>(coord(rng))}};
  }
  return out;
}

void cmd_mixing(const Options& o, Report& r) {
  const RingCtx ctx = ring(o);
  const BiPoly p = poly(o, ctx);
  const Elem a = element(o.a, ctx);
  const std::uint64_t trials = o.trials.value_or(100);
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  r.inputs()["a"] = Report::elem(ctx, a);
  r.inputs()["trials"] = trials;

  const auto g = CayleyDigraph::from_level_set(p, a);
  const auto spec = spectrum(g);
  std::mt19937_64 rng(o.seed);
  double worst = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto b = random_points(rng, ctx.order());
    const auto c = random_points(rng, ctx.order());
    const auto m = mixing_check(g, spec, b, c);
    if (m.bound > 0) worst = std::max(worst, m.defect / m.bound);
    r.check("mixing trial " + std::to_string(t), m.defect, m.bound, m.holds);
  }
  r.results()["degree"] = g.degree();
  r.results()["lambda"] = spec.lambda;
  r.results()["max_defect_over_bound"] = worst;
}

void cmd_decompose(const Options& o, Report& r) {
  const RingCtx ctx = field(o);
  const BiPoly p = poly(o, ctx);
  const auto a = set_of(o, ctx);
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  r.inputs()["set"] = o.set;
  const auto d = decomposition_count(p, a);
  auto& res = r.results();
  res["A"] = elems(ctx, a);
  res["size_b"] = d.size_b;
  res["size_c"] = d.size_c;
  res["edges"] = d.edges;
  res["edges_plus"] = d.edges_plus;
  res["edges_minus_only"] = d.edges_minus_only;
  res["bad_set"] = elems(ctx, d.bad);
  res["dprime"] = d.dprime;
  res["d"] = d.d;
  res["lambda"] = d.lambda;
  res["lower_bound"] = d.lower_bound;
  res["touched_good"] = d.touched_good;
  res["touched_bad"] = d.touched_bad;
  res["image_size"] = d.image_size;
  res["image_good"] = d.image_good;
  res["reachable_good"] = d.reachable_good;
  r.check("touched good level sets >= lower bound", double(d.touched_good), d.lower_bound,
          double(d.touched_good) >= d.lower_bound - 1e-9);
}

void sum_value(Report& r, const SumValue& s) {
  r.results()["value"] = Report::complex(s.value);
  r.results()["magnitude"] = s.magnitude;
  r.results()["bound"] = s.bound;
  r.results()["ratio"] = s.ratio;
}

std::uint64_t modulus(const Options& o) {
  if (!o.mod) throw UsageError("--mod is required");
  return *o.mod;
}

void cmd_gauss(const Options& o, Report& r) {
  const std::uint64_t m = modulus(o);
  r.inputs()["m"] = m;
  r.inputs()["z"] = o.z;
  const auto s = gauss_sum(m, o.z);
  sum_value(r, s);
  const double root = std::sqrt(double(m));
  r.check("|G(z)| = sqrt m", s.magnitude, root, std::abs(s.magnitude - root) <= 1e-9 * root);
}

void cmd_kloosterman(const Options& o, Report& r) {
  const std::uint64_t m = modulus(o);
  const auto a = detail::to_uint(o.a), b = detail::to_uint(o.b);
  r.inputs()["m"] = m;
  r.inputs()["a"] = a;
  r.inputs()["b"] = b;
  const auto s = kloosterman(m, a, b);
  sum_value(r, s);
  r.check("|K(a,b;m)| <= tau(m) gcd(a,b,m)^(1/2) sqrt m", s.magnitude, s.bound, s.magnitude <= s.bound + kBoundTolerance);
}

void cmd_weil(const Options& o, Report& r) {
  const RingCtx ctx = field(o);
  const BiPoly p = poly(o, ctx);
  const Elem a = element(o.a, ctx);
  const Point y = point(o.y, ctx);
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  r.inputs()["a"] = Report::elem(ctx, a);
  r.inputs()["y"] = Report::point(ctx, y);
  const RootSetSum sum(p.minus_constant(a));
  const auto s = sum(y);
  sum_value(r, s);
  r.results()["roots"] = sum.roots().size();
  r.check("|sum| / (k^2 sqrt q) <= pinned threshold", s.ratio, config::kWeilRatioThreshold,
          s.ratio <= config::kWeilRatioThreshold);
}

Json theorem_json(const TheoremCheck& c) {
  return {{"name", c.name},
          {"input", c.input},
          {"size", c.size},
          {"lhs", c.lhs},
          {"rhs_at_delta_1", c.rhs_at_delta_1},
          {"empirical_delta", Report::finite_or_string(c.empirical_delta)},
          {"regime", std::string(to_string(c.regime))},
          {"note", c.note}};
}

void theorem_row(Report& r, const TheoremCheck& c, double delta) {
  if (c.in_range()) r.check(c.name + " " + c.input, double(c.lhs), c.rhs(delta), c.holds(delta));
}

void cmd_sumprod(const Options& o, Report& r) {
  const RingCtx ctx = ring(o);
  const auto a = set_of(o, ctx);
  ring_inputs(r, ctx);
  r.inputs()["set"] = o.set;
  auto& res = r.results();
  res["size"] = a.size();
  res["sumset_size"] = sumset(ctx, a).size();
  if (ctx.is_field()) {
    const BiPoly p = poly(o, ctx);
    r.inputs()["poly"] = p.to_string();
    res["image_size"] = image_set(p, a).size();
    const auto c = theorem1_check(p, a);
    res["check"] = theorem_json(c);
    res["delta"] = config::kDeltaTheorem1;
    theorem_row(r, c, config::kDeltaTheorem1);
  } else {
    if (!o.poly.empty()) throw UsageError("over Z_m the product set is used; drop --poly");
    res["productset_size"] = productset(ctx, a).size();
    const auto c = theorem2_check(ctx, a);
    res["check"] = theorem_json(c);
    res["delta"] = config::kDeltaTheorem2;
    theorem_row(r, c, config::kDeltaTheorem2);
  }
}

void cmd_distances(const Options& o, Report& r) {
  const RingCtx ctx = field(o);
  const BiPoly p = poly(o, ctx);
  if (o.points.empty()) throw UsageError("--points is required");
  const auto pts = generate_points({o.points}, ctx, o.seed);
  ring_inputs(r, ctx);
  r.inputs()["poly"] = p.to_string();
  r.inputs()["points"] = o.points;
  const auto c = distance_check(p, pts);
  r.results()["size"] = pts.size();
  r.results()["distance_count"] = c.lhs;
  r.results()["check"] = theorem_json(c);
  r.results()["delta"] = config::kDeltaDistance;
  theorem_row(r, c, config::kDeltaDistance);
}

// ---------------------------------------------------------------------------
// verify suites

void verify_mixing(const Options& o, Report& r) {
  const std::uint64_t trials = o.trials.value_or(1000);
  std::mt19937_64 rng(o.seed);
  Json rows = Json::array();
  for (const std::uint64_t q : {7, 11, 13}) {
    const RingCtx ctx = RingCtx::prime_field(q);
    const BiPoly p = parse_poly("x1*x2", ctx);
    for (const std::uint32_t av : {1, 2}) {
      const auto g = CayleyDigraph::from_level_set(p, Elem{av});
      const auto spec = spectrum(g);
      double worst = 0.0;
      bool ok = true;
      auto run = [&](std::span<const Point> b, std::span<const Point> c) {
        const auto m = mixing_check(g, spec, b, c);
        ok = ok && m.holds;
        if (m.bound > 0) worst = std::max(worst, m.defect / m.bound);
      };
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
          const Point bx = g.point(x), cy = g.point(y);
          run({&bx, 1}, {&cy, 1});
        }
      }
      for (std::uint64_t t = 0; t < trials; ++t) run(random_points(rng, q), random_points(rng, q));
      rows.push_back({{"q", q}, {"a", av}, {"lambda", spec.lambda}, {"max_defect_over_bound", worst}});
      r.check("mixing x1*x2 q=" + std::to_string(q) + " a=" + std::to_string(av) + " max defect/bound", worst, 1.0, ok);
    }
  }
  r.results()["mixing"] = rows;
}

std::vector<QuadraticForm> gap2_forms(const Options& o, const RingCtx& ctx) {
  auto form = [&](const BiPoly& p) {
    QuadraticForm q{ctx, p.coefficient(2, 0), p.coefficient(1, 1), p.coefficient(0, 2), std::nullopt};
    if (q.to_poly() != p) throw UsageError("--poly must be a binary quadratic form");
    return q;
  };
  if (!o.poly.empty()) return {form(parse_poly(o.poly, ctx))};
  return {form(parse_poly("x1^2+x2^2", ctx)), form(parse_poly("2*x1*x2", ctx))};
}

void verify_gap2(const Options& o, Report& r) {
  const std::vector<std::uint64_t> moduli = o.m.empty() ? std::vector<std::uint64_t>{15, 21, 33, 35} : o.m;
  Json tables = Json::array();
  for (const auto m : moduli) {
    const RingCtx ctx = RingCtx::modular(m);
    for (const auto& q : gap2_forms(o, ctx)) {
      const auto rep = gap2_check(q, m);
      Json rows = Json::array();
      for (const auto& row : rep.rows) {
        rows.push_back({{"a", row.a.value}, {"degree", row.degree}, {"lambda", row.lambda}, {"ratio", row.ratio}});
        r.check("gap2 m=" + std::to_string(m) + " Q=" + q.to_string() + " a=" + std::to_string(row.a.value),
                row.lambda, row.bound, row.holds);
      }
      tables.push_back({{"m", m}, {"Q", q.to_string()}, {"g", rep.g}, {"gamma", rep.gamma}, {"bound", rep.bound},
                        {"rows", rows}});
    }
  }
  r.results()["gap2"] = tables;
}

std::uint64_t upper(const Options& o, std::uint64_t fallback) {
  if (o.m.size() > 1) throw UsageError("this suite takes a single --m upper limit");
  return o.m.empty() ? fallback : o.m.front();
}

void verify_gauss(const Options& o, Report& r) {
  const std::uint64_t top = upper(o, 999), trials = o.trials.value_or(20);
  std::mt19937_64 rng(o.seed);
  double worst = 0.0;
  for (std::uint64_t m = 1; m <= top; m += 2) {
    std::vector<std::uint64_t> units;
    for (std::uint64_t z = 0; z < m; ++z) {
      if (std::gcd(z, m) == 1) units.push_back(z);
    }
    double err = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto s = gauss_sum(m, units[rng() % units.size()]);
      err = std::max(err, std::abs(s.magnitude - std::sqrt(double(m))) / std::sqrt(double(m)));
    }
    worst = std::max(worst, err);
    r.check("gauss m=" + std::to_string(m) + " max relative error", err, 1e-9, err <= 1e-9);
  }
  r.results()["gauss"] = {{"max_m", top}, {"trials", trials}, {"max_relative_error", worst}};
}

void verify_kloosterman(const Options& o, Report& r) {
  const std::uint64_t top = upper(o, 99);
  double worst = 0.0;
  for (std::uint64_t m = 1; m <= top; m += 2) {
    double ratio = 0.0;
    bool ok = true;
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = 0; b < m; ++b) {
        const auto s = kloosterman(m, a, b);
        ok = ok && s.magnitude <= s.bound + kBoundTolerance;
        ratio = std::max(ratio, s.ratio);
      }
    }
    worst = std::max(worst, ratio);
    r.check("kloosterman m=" + std::to_string(m) + " max |K|/bound", ratio, 1.0, ok);
  }
  r.results()["kloosterman"] = {{"max_m", top}, {"max_ratio", worst}};
}

void verify_theorem(Report& r, const std::string& name, const std::vector<TheoremCheck>& cal,
                    const std::vector<TheoremCheck>& held, double pinned) {
  const double delta = calibrate_delta(cal);
  r.check(name + " delta_cal > 0", delta, 0.0, delta > 0);
  r.check(name + " delta_cal matches pinned", delta, pinned,
          std::abs(delta - pinned) <= config::kPinTolerance * pinned);
  std::size_t in_range = 0;
  Json labelled = Json::array();
  for (const auto& c : held) {
    if (!c.in_range()) {
      labelled.push_back(theorem_json(c));
      continue;
    }
    ++in_range;
    theorem_row(r, c, delta);
  }
  r.results()[name] = {{"delta_cal", delta},
                       {"pinned", pinned},
                       {"calibration_checks", cal.size()},
                       {"held_out_in_range", in_range},
                       {"held_out_out_of_range", labelled}};
}

void verify(const Options& o, Report& r) {
  using corpus::Split;
  const std::string& s = o.suite;
  r.inputs()["suite"] = s;
  if (!o.m.empty()) r.inputs()["m"] = o.m;
  const bool all = s == "all";
  bool known = all;
  auto want = [&](const char* name) {
    const bool hit = all || s == name;
    known = known || hit;
    return hit;
  };
  if (want("mixing")) verify_mixing(o, r);
  if (want("gap2")) verify_gap2(o, r);
  if (want("gauss")) verify_gauss(o, r);
  if (want("kloosterman")) verify_kloosterman(o, r);
  if (want("theorem1")) {
    verify_theorem(r, "theorem1", corpus::theorem1_corpus(Split::Calibration), corpus::theorem1_corpus(Split::HeldOut),
                   config::kDeltaTheorem1);
  }
  if (want("theorem2")) {
    verify_theorem(r, "theorem2", corpus::theorem2_corpus(Split::Calibration), corpus::theorem2_corpus(Split::HeldOut),
                   config::kDeltaTheorem2);
  }
  if (want("distance")) {
    verify_theorem(r, "distance", corpus::distance_corpus(Split::Calibration), corpus::distance_corpus(Split::HeldOut),
                   config::kDeltaDistance);
  }
  if (!known) throw UsageError("unknown suite '" + s + "'");
}

// ---------------------------------------------------------------------------

enum Flag : unsigned {
  kRing = 1, kPoly = 2, kA = 4, kSet = 8, kPoints = 16, kTrials = 32, kMethod = 64, kMod = 128, kZ = 256, kB = 512,
  kY = 1024,
};

CLI::App* command(CLI::App& app, Options& o, const std::string& name, const std::string& help, unsigned flags) {
  CLI::App* sub = app.add_subcommand(name, help);
  if (flags & kRing) {
    sub->add_option("--field", o.field, "field order p or p^r");
    sub->add_option("--irreducible", o.irreducible, "modulus coefficients c_0,...,c_r for F_{p^r}");
  }
  if (flags & (kRing | kMod)) sub->add_option("--mod", o.mod, "modulus m (ring Z_m)");
  if (flags & kPoly) sub->add_option("--poly", o.poly, "polynomial in x1, x2");
  if (flags & kA) sub->add_option("--a", o.a, "element index (negative values map through Z)");
  if (flags & kSet) {
    sub->add_option("--set", o.set, "interval:N | ap:S:D:N | geometric:R:N | random:N[:seed=S] | subfield[:D] | list:v,...");
  }
  if (flags & kPoints) sub->add_option("--points", o.points, "plane | grid:N | random:N[:seed=S] | pts:X,Y;X,Y");
  if (flags & kTrials) sub->add_option("--trials", o.trials, "number of random trials");
  if (flags & kMethod) sub->add_option("--method", o.method, "transform | direct");
  if (flags & kZ) sub->add_option("--z", o.z, "Gauss sum argument");
  if (flags & kB) sub->add_option("--b", o.b, "second Kloosterman argument");
  if (flags & kY) sub->add_option("--y", o.y, "frequency X,Y");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--out", o.out, "output path (default stdout)");
  sub->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Spectra and sum-product experiments for polynomial Cayley digraphs"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, void (*)(const Options&, Report&)>> handlers;
  handlers.push_back({command(app, o, "spectrum", "eigenvalues of the level-set digraph G_a",
                              kRing | kPoly | kA | kMethod), cmd_spectrum});
  handlers.push_back({command(app, o, "degeneracy", "test P = Q(L); otherwise list the bad set", kRing | kPoly),
                      cmd_degeneracy});
  handlers.push_back({command(app, o, "mixing", "mixing inequality on random vertex sets",
                              kRing | kPoly | kA | kTrials), cmd_mixing});
  handlers.push_back({command(app, o, "decompose", "edge decomposition counts for A", kRing | kPoly | kSet),
                      cmd_decompose});
  CLI::App* charsum = app.add_subcommand("charsum", "character sums");
  charsum->require_subcommand(1);
  handlers.push_back({command(*charsum, o, "gauss", "quadratic Gauss sum", kMod | kZ), cmd_gauss});
  handlers.push_back({command(*charsum, o, "kloosterman", "Kloosterman sum", kMod | kA | kB), cmd_kloosterman});
  handlers.push_back({command(*charsum, o, "weil", "sum over Root(P - a)", kRing | kPoly | kA | kY), cmd_weil});
  handlers.push_back({command(app, o, "sumprod", "sum and product set sizes", kRing | kPoly | kSet), cmd_sumprod});
  handlers.push_back({command(app, o, "distances", "distinct P-distances", kRing | kPoly | kPoints), cmd_distances});
  CLI::App* ver = command(app, o, "verify", "run a verification suite", kPoly | kTrials);
  ver->add_option("suite,--suite", o.suite, "mixing | gap2 | gauss | kloosterman | theorem1 | theorem2 | distance | all")
      ->required();
  ver->add_option("--m", o.m, "moduli (gap2) or upper limit (gauss, kloosterman)")->delimiter(',');
  handlers.push_back({ver, verify});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    std::string name = sub->get_name();
    if (sub->get_parent() == charsum) name = "charsum " + name;
    try {
      Report report(name, o.seed);
      handler(o, report);
      report.write(o.format == "csv" ? cli::Format::Csv : cli::Format::Json, o.out);
      return report.all_hold() ? 0 : 3;
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 1;
    } catch (const ParseError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 1;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return e.code() == ErrorCode::TheoremViolation ? 3 : 2;
    }
  }
  std::cerr << app.help();
  return 1;
}
