/*
 * Copyright 2026 The multiunit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "multiunit/core.hpp"

namespace multiunit {

/// Universe of test instances: every normalized monotone valuation over m
/// items with values in {0, 1/d, 2/d, ..., maxValue}.
struct Grid {
  int m = 2;
  Rat max_value{1};
  int denominator = 1;
};

/// Enumerates the grid in lexicographic order of (v(1), ..., v(m)).
std::vector<Valuation> enumerate(const Grid& grid);

/// Monotone step valuations with v(1) = 0 and v(m-1) = v(m-2) (m > 2).
std::vector<Valuation> enumerate_degenerate(const Grid& grid);

/// `count` valuations drawn from the grid: sorted uniform draws of m level
/// indices, seeded. Only uses the raw mt19937_64 stream, so the draws are
/// identical across standard libraries.
std::vector<Valuation> random_valuations(const Grid& grid, std::size_t count, std::uint64_t seed);

bool is_degenerate(const Valuation& v);

}  // namespace multiunit
