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


// Report serialization for the command-line tool. Kept out of the library
// because it pulls in the vendored JSON header.

#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumprod/algebra.hpp"
#include "sumprod/error.hpp"

namespace sumprod::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

struct CheckRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

class Report {
 public:
  Report(std::string command, std::uint64_t seed)
      : command_(std::move(command)), seed_(seed), start_(std::chrono::steady_clock::now()) {}

  Json& inputs() { return inputs_; }
  Json& results() { return results_; }

  void check(std::string name, double lhs, double rhs, bool holds) {
    checks_.push_back({std::move(name), lhs, rhs, holds});
  }

  bool all_hold() const {
    for (const auto& c : checks_) {
      if (!c.holds) return false;
    }
    return true;
  }

  std::string render(Format format) const {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (format == Format::Csv) {
      std::ostringstream os;
      os << "name,lhs,rhs,holds\n";
      for (const auto& c : checks_) {
        os << csv_field(c.name) << ',' << number(c.lhs) << ',' << number(c.rhs) << ',' << (c.holds ? "true" : "false")
           << '\n';
      }
      return os.str();
    }
    Json out;
    out["command"] = command_;
    out["inputs"] = inputs_.is_null() ? Json::object() : inputs_;
    out["seed"] = seed_;
    out["results"] = results_.is_null() ? Json::object() : results_;
    out["checks"] = Json::array();
    for (const auto& c : checks_) {
      out["checks"].push_back({{"name", c.name}, {"lhs", finite_or_string(c.lhs)}, {"rhs", finite_or_string(c.rhs)},
                               {"holds", c.holds}});
    }
    out["timing_ms"] = ms;
    return out.dump(2) + "\n";
  }

  void write(Format format, const std::string& path) const {
    const auto text = render(format);
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream file(path);
    if (!file) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "' for writing");
    file << text;
  }

  static Json complex(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

  static Json elem(const RingCtx& ctx, Elem a) {
    if (ctx.kind() == RingKind::ExtensionField) return ctx.to_string(a);
    return a.value;
  }

  static Json point(const RingCtx& ctx, Point x) { return Json::array({elem(ctx, x.x1), elem(ctx, x.x2)}); }

  // JSON has no infinity.
  static Json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }

 private:
  static std::string number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + '"';
  }

  std::string command_;
  std::uint64_t seed_;
  std::chrono::steady_clock::time_point start_;
  Json inputs_;
  Json results_;
  std::vector<CheckRow> checks_;
};

}  // namespace sumprod::cli
