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
#include "multiunit/induced.hpp"
#include "support.hpp"

using namespace multiunit;
using testing::R;
using testing::V;

namespace {
const TriageParams k45{R("1"), R("4/5"), R("4/5")};
TwoItemValuation T(const char* a, const char* b) { return {R(a), R(b)}; }
}  // namespace

TEST_CASE("index validity") {
  CHECK(is_valid({2, 4, 2, 4}, 4));
  CHECK(!is_valid({1, 2, 1, 2}, 4));
  CHECK(!is_valid({1, 5, 1, 4}, 5));  // l1 + h2 = m
  CHECK(is_valid({2, 5, 1, 4}, 5));
  CHECK(is_valid({1, 2, 1, 2}, 2));
  CHECK(valid_indices(2).size() == 1);
  for (int m = 3; m <= 6; ++m)
    for (const auto& idx : valid_indices(m)) CHECK(is_valid(idx, m));
}

TEST_CASE("valuation extensions") {
  CHECK(extend_valuation(T("2", "5"), 2, 4, 5) == V("0,0,2,2,5,5"));
  CHECK(extend_valuation(T("2", "5"), 1, 2, 3) == V("0,2,5,5"));
  CHECK(extend_valuation(T("0", "0"), 2, 3, 4) == V("0,0,0,0,0"));
  CHECK_ERRC(extend_valuation(T("1", "2"), 3, 3, 4), Errc::BadIndices);
  CHECK_ERRC(extend_valuation(T("1", "2"), 0, 2, 4), Errc::BadIndices);
  CHECK_ERRC(extend_valuation(T("1", "2"), 2, 5, 4), Errc::BadIndices);
}

TEST_CASE("induced outcomes") {
  const auto triage = make_mechanism(k45);
  const auto o = induced_outcome(triage, 4, {2, 4, 2, 4}, T("3", "5"), T("2", "4"));
  CHECK(o.allocation == Allocation2{2, 0});
  CHECK(o.pay_alice == 4);
  CHECK_ERRC(induced_outcome(triage, 4, {1, 2, 1, 2}, T("3", "5"), T("2", "4")), Errc::BadIndices);

  const auto vcg3 = make_mechanism(TriageParams{R("1"), R("1"), R("1")});
  const auto induced = induced_outcome(vcg3, 3, {1, 3, 1, 3}, T("3", "5"), T("2", "4"));
  CHECK(induced == make_mechanism(WvcgParams{}).run(V("0,3,5"), V("0,2,4")));
}

TEST_CASE("induced schedules agree with charged payments") {
  for (int m = 3; m <= 6; ++m) {
    const auto mech = make_mechanism(k45);
    const auto grid = enumerate(Grid{2, Rat(1), m <= 4 ? 3 : 2});
    for (const auto& idx : valid_indices(m)) {
      const auto induced = induced_mechanism(mech, m, idx);
      for (const auto& v : grid)
        for (const auto& u : grid) {
          const auto o = induced.run(v, u);
          REQUIRE(o.pay_alice == induced.alice_prices(u)[o.allocation.alice]);
          REQUIRE(o.pay_bob == induced.bob_prices(v)[o.allocation.bob]);
        }
    }
  }
}

TEST_CASE("induced triage parameters") {
  const auto triage = make_mechanism(k45);
  CHECK(fit_induced_params(triage, 4, {1, 4, 1, 4}) == k45);
  CHECK(fit_induced_params(triage, 4, {2, 4, 2, 4}) == TriageParams{R("1"), R("1"), R("1")});
  for (const auto& idx : valid_indices(4)) {
    CHECK(fit_induced_params(make_mechanism(WvcgParams{}), 4, idx) == TriageParams{R("1"), R("1"), R("1")});
  }
  CHECK_ERRC(fit_induced_params(triage, 4, {1, 2, 1, 2}), Errc::BadIndices);
  CHECK_ERRC(fit_induced_params(make_mechanism(make_shifted_params(R("1/2"))), 2, {1, 2, 1, 2}),
             Errc::ConstraintViolated);
}

TEST_CASE("parameter equalities across indices") {
  CHECK(check_param_equalities(make_mechanism(k45), 4, all_index_pairs(4)).passed);
  CHECK(check_param_equalities(make_mechanism(WvcgParams{}), 4, all_index_pairs(4)).passed);
  const auto t = make_mechanism(TriageParams{R("2"), R("3/5"), R("4/5")});
  const std::vector<std::pair<InducedIndex, InducedIndex>> pair{{{2, 5, 1, 5}, {2, 5, 1, 4}}};
  const auto report = check_param_equalities(t, 5, pair);
  CHECK(report.passed);
  CHECK(fit_induced_params(t, 5, {2, 5, 1, 5}) == fit_induced_params(t, 5, {2, 5, 1, 4}));
  const std::vector<std::pair<InducedIndex, InducedIndex>> invalid{{{1, 5, 1, 5}, {1, 5, 1, 4}}};
  CHECK_ERRC(check_param_equalities(t, 5, invalid), Errc::BadIndices);
}

TEST_CASE("a mechanism whose weight drifts across indices is caught") {
  // Bob's price for the whole stock follows w = 1, any smaller bundle uses w = 1/2.
  Mechanism drift;
  drift.name = "drift";
  drift.bob_prices = [](const Valuation& v) {
    auto p = wvcg_schedule(v, Rat(1, 2));
    std::vector<Rat> prices(p.prices().begin(), p.prices().end());
    prices.back() = v.top();
    return PaymentSchedule(prices);
  };
  drift.alice_prices = [](const Valuation& u) { return wvcg_schedule(u, Rat(1)); };
  drift.run = [](const Valuation& v, const Valuation& u) { return make_outcome(v, u, {0, 0}, Rat(0), Rat(0)); };
  const std::vector<std::pair<InducedIndex, InducedIndex>> pair{{{1, 3, 1, 3}, {2, 3, 1, 2}}};
  const auto report = check_param_equalities(drift, 3, pair);
  CHECK(!report.passed);
  CHECK(report.note.rfind("w differs", 0) == 0);
}

TEST_CASE("simple valuations") {
  CHECK(make_simple(2, R("3"), R("7"), 5) == V("0,0,3,3,3,7"));
  CHECK(make_simple(1, R("0"), R("0"), 2) == V("0,0,0"));
  CHECK_ERRC(make_simple(2, R("5"), R("3"), 5), Errc::NotMonotone);
  CHECK_ERRC(make_simple(5, R("1"), R("3"), 5), Errc::BadIndices);
  for (const auto& v : simple_valuations(Grid{4, Rat(1), 2})) CHECK(v[1] == 0);
}

TEST_CASE("payments on valuations with no value for one item") {
  const auto t5 = make_mechanism(k45);
  const auto v = V("0,0,3,3,3,7");
  const auto f = t5.bob_prices(v);
  CHECK(f[5] == 7);
  CHECK(f[2] == 4);
  CHECK(f[3] == 4);
  const auto t4 = make_mechanism(TriageParams{R("2"), R("4/5"), R("4/5")});
  CHECK(t4.bob_prices(V("0,0,2,2,6"))[4] == 12);
  CHECK(t4.bob_prices(V("0,0,0,0,0")) == PaymentSchedule({0, 0, 0, 0, 0}));
  for (int m = 3; m <= 5; ++m) {
    const auto vals = simple_valuations(Grid{m, Rat(2), 2});
    CHECK(check_simple_payments(make_mechanism(k45), R("1"), vals).passed);
    CHECK(check_simple_payments(t4, R("2"), vals).passed);
    CHECK(check_simple_payments(make_mechanism(k45), R("1"), enumerate(Grid{m, Rat(1), 2})).passed);
  }
  CHECK(!check_simple_payments(t4, R("1"), simple_valuations(Grid{4, Rat(1), 1})).passed);
}

TEST_CASE("weighted welfare on degenerate valuations") {
  const auto t = make_mechanism(k45);
  const auto r = check_degenerate_welfare(t, R("1"), V("0,0,2,2,6"), V("0,0,3,3,5"));
  CHECK(r.passed);
  const auto dw = degenerate_welfare(t, R("1"), V("0,0,2,2,6"), V("0,0,3,3,5"));
  CHECK(dw.allocation == Allocation2{4, 0});
  CHECK(dw.weighted == 6);
  CHECK(dw.weighted_max == 6);
  const auto z = degenerate_welfare(make_mechanism(TriageParams{R("1"), R("4/5"), R("4/5")}), R("1"), V("0,0,0,4"),
                                    V("0,0,0,4"));
  CHECK(z.weighted == 4);
  CHECK_ERRC(check_degenerate_welfare(t, R("1"), V("0,1,2,2,6"), V("0,0,3,3,5")), Errc::NotDegenerate);
  CHECK_ERRC(check_degenerate_welfare(t, R("1"), V("0,0,1"), V("0,0,1")), Errc::NotDegenerate);
  for (int m = 3; m <= 5; ++m) {
    const auto universe = enumerate_degenerate(Grid{m, Rat(1), 2});
    CHECK(check_degenerate_welfare(make_mechanism(TriageParams{R("1"), R("1"), R("1")}), R("1"), universe).passed);
    CHECK(check_degenerate_welfare(t, R("1"), universe).passed);
  }
}

TEST_CASE("degenerate welfare with a weight other than one") {
  // Bob faces w (v(m) - v(m - t)): the output maximizes w v + u.
  const auto t = make_mechanism(TriageParams{R("2"), R("4/5"), R("4/5")});
  const auto universe = enumerate_degenerate(Grid{4, Rat(1), 2});
  bool weighted_ok = true;
  for (const auto& v : universe)
    for (const auto& u : universe) {
      const auto dw = degenerate_welfare(t, R("2"), v, u);
      CHECK(dw.swapped == dw.swapped_max);
      weighted_ok = weighted_ok && dw.weighted == dw.weighted_max;
    }
  CHECK(!weighted_ok);
}
