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


#pragma once

#include "sumprod/algebra.hpp"
#include "sumprod/bipoly.hpp"
#include "sumprod/cayley.hpp"
#include "sumprod/charsums.hpp"
#include "sumprod/config.hpp"
#include "sumprod/corpus.hpp"
#include "sumprod/dft.hpp"
#include "sumprod/error.hpp"
#include "sumprod/experiments.hpp"
#include "sumprod/mixing.hpp"
#include "sumprod/parser.hpp"
