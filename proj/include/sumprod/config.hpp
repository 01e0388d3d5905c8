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

// Measured constants. These are regression guards taken from calibration
// runs over the standard corpora, not mathematical facts.

#pragma once

#include <cstdint>

namespace sumprod::config {

/// Upper guard on max |weil_sum| / (k^2 sqrt q) over the Weil corpus.
inline constexpr double kWeilRatioThreshold = 4.0;

/// min lhs / rhs(delta = 1) over the in-range calibration checks.
inline constexpr double kDeltaTheorem1 = 1.993377434954678;
inline constexpr double kDeltaTheorem2 = 1.0;
inline constexpr double kDeltaDistance = 6.496239601492543;

/// Relative agreement between a recomputed and a pinned constant.
inline constexpr double kPinTolerance = 1e-9;

inline constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace sumprod::config
