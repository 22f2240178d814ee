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
#include "multiunit/grid.hpp"

#include <algorithm>
#include <random>

namespace multiunit {

namespace {

int level_count(const Grid& grid) {
  if (grid.m < 2) throw Error(Errc::TooShort, "grid needs m >= 2");
  if (grid.denominator <= 0) throw Error(Errc::NegativeInput, "grid denominator must be positive");
  if (grid.max_value.sign() < 0) throw Error(Errc::NegativeInput, "grid maxValue must be >= 0");
  const Rat scaled = grid.max_value * Rat(grid.denominator);
  mpz_class floor_levels;
  mpz_fdiv_q(floor_levels.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
  return static_cast<int>(floor_levels.get_si());
}

Valuation from_levels(const std::vector<int>& levels, int denominator) {
  std::vector<Rat> values;
  values.reserve(levels.size() + 1);
  values.emplace_back(0);
  for (int l : levels) values.emplace_back(l, denominator);
  return Valuation(std::move(values));
}

void extend(std::vector<int>& prefix, int remaining, int top, int denominator, std::vector<Valuation>& out) {
  if (remaining == 0) {
    out.push_back(from_levels(prefix, denominator));
    return;
  }
  const int start = prefix.empty() ? 0 : prefix.back();
  for (int l = start; l <= top; ++l) {
    prefix.push_back(l);
    extend(prefix, remaining - 1, top, denominator, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Valuation> enumerate(const Grid& grid) {
  const int top = level_count(grid);
  std::vector<Valuation> out;
  std::vector<int> prefix;
  extend(prefix, grid.m, top, grid.denominator, out);
  return out;
}

bool is_degenerate(const Valuation& v) {
  const std::size_t m = v.items();
  return m > 2 && v[1].is_zero() && v[m - 1] == v[m - 2];
}

std::vector<Valuation> enumerate_degenerate(const Grid& grid) {
  if (grid.m <= 2) throw Error(Errc::NotDegenerate, "degenerate valuations need m > 2");
  std::vector<Valuation> out;
  for (auto& v : enumerate(grid)) {
    if (is_degenerate(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Valuation> random_valuations(const Grid& grid, std::size_t count, std::uint64_t seed) {
  const int top = level_count(grid);
  const auto span = static_cast<std::uint64_t>(top) + 1;
  std::mt19937_64 gen(seed);
  std::vector<Valuation> out;
  out.reserve(count);
  std::vector<int> levels(static_cast<std::size_t>(grid.m));
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& l : levels) l = static_cast<int>(gen() % span);
    std::sort(levels.begin(), levels.end());
    out.push_back(from_levels(levels, grid.denominator));
  }
  return out;
}

}  // namespace multiunit
