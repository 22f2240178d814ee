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
#include <random>

#include "multiunit/lp.hpp"
#include "support.hpp"

using namespace multiunit;
using namespace multiunit::lp;
using testing::R;

TEST_CASE("standard form: feasible and infeasible") {
  // z1 + z2 = 1, z1 - z2 = 0
  auto ok = solve_standard_form({{R("1"), R("1")}, {R("1"), R("-1")}}, {R("1"), R("0")});
  REQUIRE(ok.feasible);
  CHECK(ok.solution == Vector{R("1/2"), R("1/2")});
  // z1 + z2 = -1 has no non-negative solution.
  auto bad = solve_standard_form({{R("1"), R("1")}}, {R("-1")});
  REQUIRE(!bad.feasible);
  REQUIRE(bad.farkas.size() == 1);
  CHECK(bad.farkas[0] * R("-1") > 0);
  CHECK(bad.farkas[0] * R("1") <= 0);
}

TEST_CASE("inequalities: a point inside a box") {
  // x >= 1, -x >= -3, y >= 2, -y >= -2
  Matrix g{{R("1"), R("0")}, {R("-1"), R("0")}, {R("0"), R("1")}, {R("0"), R("-1")}};
  Vector h{R("1"), R("-3"), R("2"), R("-2")};
  auto res = solve_inequalities(g, h);
  REQUIRE(std::holds_alternative<FeasiblePoint>(res));
  CHECK(satisfies(g, h, std::get<FeasiblePoint>(res).x));
}

TEST_CASE("inequalities: contradictory bounds give a checkable proof") {
  Matrix g{{R("1")}, {R("-1")}};
  Vector h{R("2"), R("-1")};  // x >= 2 and x <= 1
  auto res = solve_inequalities(g, h);
  REQUIRE(std::holds_alternative<InfeasibilityProof>(res));
  const auto& y = std::get<InfeasibilityProof>(res).multipliers;
  CHECK(proves_infeasible(g, h, y));
  CHECK(!proves_infeasible(g, h, Vector{R("0"), R("0")}));
  CHECK(!satisfies(g, h, Vector{R("3/2")}));
}

TEST_CASE("inequalities: random systems always yield one valid certificate") {
  std::mt19937_64 rng(11);
  auto draw = [&] { return Rat(static_cast<std::int64_t>(rng() % 7) - 3, 1 + static_cast<std::int64_t>(rng() % 3)); };
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + rng() % 5, cols = 1 + rng() % 3;
    Matrix g(rows, Vector(cols));
    Vector h(rows);
    for (auto& row : g)
      for (auto& x : row) x = draw();
    for (auto& x : h) x = draw();
    auto res = solve_inequalities(g, h);
    if (auto* p = std::get_if<FeasiblePoint>(&res)) {
      ++feasible;
      CHECK(satisfies(g, h, p->x));
    } else {
      ++infeasible;
      CHECK(proves_infeasible(g, h, std::get<InfeasibilityProof>(res).multipliers));
    }
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("degenerate system with an empty row set") {
  auto res = solve_inequalities(Matrix{}, Vector{});
  CHECK(std::holds_alternative<FeasiblePoint>(res));
}
