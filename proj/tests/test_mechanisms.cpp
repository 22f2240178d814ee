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
#include "multiunit/mechanisms.hpp"
#include "support.hpp"

using namespace multiunit;
using testing::R;
using testing::S;
using testing::V;

namespace {
const TriageParams k45{R("1"), R("4/5"), R("4/5")};
const TriageParams k35{R("1"), R("3/5"), R("3/5")};
}  // namespace

TEST_CASE("triage parameter constraints") {
  CHECK_NOTHROW(make_triage_params(R("2"), R("3/5"), R("4/5")));
  CHECK_ERRC(make_triage_params(R("1"), R("1/5"), R("1/5")), Errc::ConstraintViolated);
  CHECK_ERRC(make_triage_params(R("0"), R("1"), R("1")), Errc::ConstraintViolated);
  CHECK_ERRC(make_triage_params(R("1"), R("0"), R("1")), Errc::ConstraintViolated);
  CHECK_ERRC(make_triage_params(R("1"), R("6/5"), R("1")), Errc::ConstraintViolated);
  CHECK(satisfies_triage_constraints({R("1"), R("2/5"), R("3/5")}));
  CHECK(!satisfies_triage_constraints({R("1"), R("2/5"), R("1/2")}));
}

TEST_CASE("triage schedules, Bob side") {
  CHECK(triage_schedule(V("0,9/10,1"), k45, Side::ChargeBob) == S("0,9/40,9/8"));
  CHECK(triage_schedule(V("0,1/10,1"), k45, Side::ChargeBob) == S("0,4/5,1"));
  CHECK(triage_schedule(V("0,3,5"), {R("1"), R("1"), R("1")}, Side::ChargeBob) == S("0,2,5"));
  CHECK(triage_schedule(V("0,0,2,3"), k45, Side::ChargeBob) == S("0,1,3,3"));
}

TEST_CASE("triage schedules, Alice side uses 1/w and swapped thresholds") {
  const TriageParams p{R("2"), R("3/5"), R("4/5")};
  // u(1)/u(2) = 9/10 >= thetaB: high branch, q = u(1) / (w thetaB).
  CHECK(triage_schedule(V("0,9/10,1"), p, Side::ChargeAlice) == S("0,9/80,9/16"));
  // u(1)/u(2) = 1/10 <= 1 - thetaA: low branch, one item at (1 - (1 - thetaA)) / w.
  CHECK(triage_schedule(V("0,1/10,1"), p, Side::ChargeAlice) == S("0,3/10,1/2"));
}

TEST_CASE("triage low branch implies the top price is w v(m)") {
  for (const auto& params : {k45, k35, TriageParams{R("2"), R("3/5"), R("4/5")}}) {
    for (const auto& v : enumerate(Grid{3, Rat(2), 2})) {
      if (v[2] <= (Rat(1) - params.theta_b) * v.top()) {
        CHECK(triage_schedule(v, params, Side::ChargeBob)[3] == params.w * v.top());
      }
    }
  }
}

TEST_CASE("weighted VCG schedules") {
  CHECK(wvcg_schedule(V("0,3,5"), R("1")) == S("0,2,5"));
  CHECK(wvcg_schedule(V("0,3,5"), R("2")) == S("0,4,10"));
  CHECK(wvcg_schedule(V("0,0,0"), R("1")) == S("0,0,0"));
  CHECK_ERRC(wvcg_schedule(V("0,3,5"), R("0")), Errc::NonPositiveWeight);
}

TEST_CASE("shifted maximizer schedules") {
  CHECK(shifted_schedule(V("0,1,2"), make_shifted_params(R("1/2"))) == S("0,2,2"));
  const auto s = shifted_schedule(V("0,0,2"), make_shifted_params(R("1/2")));
  CHECK(s == S("0,3,2"));
  CHECK(!s.is_monotone());
  CHECK(shifted_schedule(V("0,0,0"), make_shifted_params(R("1"))) == S("0,0,0"));
  CHECK_ERRC(make_shifted_params(R("0")), Errc::ConstraintViolated);
  CHECK_ERRC(make_shifted_params(R("3/2")), Errc::ConstraintViolated);
}

TEST_CASE("fractions auction schedules") {
  const auto half2 = make_fractions_params({R("1/2"), R("1/2")});
  auto a = fractions_schedules(V("0,1,2,3"), V("0,1,2,3"), half2);
  CHECK(a.bob == S("0,3/2,3/2,3"));
  CHECK(a.alice == S("0,4,4,4"));
  auto b = fractions_schedules(V("0,1,2"), V("0,0,0"), make_fractions_params({R("1/2")}));
  CHECK(b.bob == S("0,1,2"));
  CHECK(b.alice == S("0,0,0"));
  auto c = fractions_schedules(V("0,1,2"), V("0,1,1"), make_fractions_params({R("1")}));
  CHECK(c.bob == S("0,2,2"));
  CHECK(c.alice == S("0,1,1"));
  CHECK_ERRC(make_fractions_params({R("0")}), Errc::ZeroAlpha);
  CHECK_ERRC(make_fractions_params({R("1/2"), R("1/3")}), Errc::ConstraintViolated);
  CHECK_ERRC(fractions_schedules(V("0,1,2"), V("0,1,2"), half2), Errc::LengthMismatch);
}

TEST_CASE("taxation outcome") {
  const auto vcg = make_mechanism(WvcgParams{});
  const auto o = vcg.run(V("0,3,5"), V("0,2,4"));
  CHECK(o.allocation == Allocation2{2, 0});
  CHECK(o.pay_alice == 4);
  CHECK(o.pay_bob == 0);
  CHECK(o.welfare == 5);

  const auto t = run(k35, V("0,1/10,1"), V("0,7/10,3/4"));
  CHECK(t.allocation == Allocation2{0, 1});
  CHECK(t.pay_bob == R("3/5"));
  CHECK(t.welfare == R("7/10"));
  CHECK(ratio(optimal_welfare2(V("0,1/10,1"), V("0,7/10,3/4")).welfare, t.welfare) == R("10/7"));

  CHECK_ERRC(taxation_outcome(V("0,0,20"), V("0,5,5"), S("0,5,5"), S("0,1,10")), Errc::InfeasibleMechanism);
}

TEST_CASE("affine maximizer outcomes") {
  AffineSpec welfare{full_range(2), R("1"), R("1"), {}};
  CHECK(affine_outcome(welfare, V("0,3,5"), V("0,2,4")) == Allocation2{2, 0});
  AffineSpec single{{Allocation2{0, 0}}, R("1"), R("1"), {}};
  CHECK(affine_outcome(single, V("0,3,5"), V("0,2,4")) == Allocation2{0, 0});
  AffineSpec bob_heavy{full_range(2), R("1"), R("2"), {}};
  CHECK(affine_outcome(bob_heavy, V("0,3,5"), V("0,2,4")) == Allocation2{0, 2});
  CHECK(full_range(2).size() == 6);
}

TEST_CASE("dispatch over the four families") {
  CHECK(run(TriageParams{R("1"), R("1"), R("1")}, V("0,3,5"), V("0,2,4")) ==
        run(WvcgParams{}, V("0,3,5"), V("0,2,4")));
  const auto s = run(make_shifted_params(R("1/2")), V("0,1,2"), V("0,1,2"));
  CHECK(s.allocation.total() <= 2);
  CHECK(s.welfare * 3 >= optimal_welfare2(V("0,1,2"), V("0,1,2")).welfare);
  const auto f = run(make_fractions_params({R("1/2")}), V("0,0,0"), V("0,0,0"));
  CHECK(f.welfare == 0);
  CHECK(f.pay_alice == 0);
  CHECK(f.pay_bob == 0);
  CHECK(describe(k45) == "triage(w=1,thetaA=4/5,thetaB=4/5)");
  CHECK(family_name(make_shifted_params(R("1"))) == "shifted");
}

TEST_CASE("outcomes are deterministic and individually rational at truth") {
  const std::vector<MechanismParams> families{k45, WvcgParams{R("2")}, make_shifted_params(R("1")),
                                              make_fractions_params({R("1/2")})};
  const auto grid = enumerate(Grid{2, Rat(1), 3});
  for (const auto& params : families) {
    for (const auto& v : grid) {
      for (const auto& u : grid) {
        const auto a = run(params, v, u);
        REQUIRE(a == run(params, v, u));
        CHECK(a.util_alice.sign() >= 0);
        CHECK(a.util_bob.sign() >= 0);
      }
    }
  }
}

TEST_CASE("first price strawman has no schedules") {
  const auto fp = first_price_strawman();
  CHECK(!fp.has_schedules());
  const auto o = fp.run(V("0,0,5"), V("0,0,4"));
  CHECK(o.allocation == Allocation2{2, 0});
  CHECK(o.pay_alice == 5);
}
