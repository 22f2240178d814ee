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

#include <functional>
#include <optional>
#include <set>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "multiunit/core.hpp"

namespace multiunit {

/// (w, thetaA, thetaB) of a Triage auction.
struct TriageParams {
  Rat w;
  Rat theta_a;
  Rat theta_b;

  friend bool operator==(const TriageParams&, const TriageParams&) = default;
};

/// Validates w > 0, thetas in (0, 1] and thetaA >= 1 - thetaB.
TriageParams make_triage_params(Rat w, Rat theta_a, Rat theta_b);
bool satisfies_triage_constraints(const TriageParams& p);

struct WvcgParams {
  Rat w{1};
};

struct ShiftedParams {
  Rat alpha;
};
ShiftedParams make_shifted_params(Rat alpha);

/// (alpha_1, ..., alpha_{m-1}), non-decreasing in [0, 1] with alpha_1 > 0.
struct FractionsParams {
  std::vector<Rat> alphas;
};
FractionsParams make_fractions_params(std::vector<Rat> alphas);

/// Which bidder faces the schedule being built.
enum class Side {
  ChargeBob,    ///< induced by Alice's valuation, weight w
  ChargeAlice,  ///< induced by Bob's valuation, weight 1/w, theta roles swapped
};

PaymentSchedule triage_schedule(const Valuation& other, const TriageParams& params, Side side);

/// prices[t] = weight * (v(m) - v(m - t)).
PaymentSchedule wvcg_schedule(const Valuation& other, const Rat& weight);

/// prices[t] = (1 + alpha) v(m) - v(m - t) for 0 < t < m, prices[m] = v(m).
PaymentSchedule shifted_schedule(const Valuation& other, const ShiftedParams& params);

/// Bob's schedule, induced by Alice's valuation v.
PaymentSchedule fractions_bob_schedule(const Valuation& v, const FractionsParams& params);
/// Alice's schedule, induced by Bob's valuation u.
PaymentSchedule fractions_alice_schedule(const Valuation& u, const FractionsParams& params);

struct SchedulePair {
  PaymentSchedule alice;
  PaymentSchedule bob;
};
SchedulePair fractions_schedules(const Valuation& v, const Valuation& u, const FractionsParams& params);

/// Taxation-principle allocation: among feasible pairs of the two winning
/// sets pick max welfare, then max items, then max Alice bundle.
/// Throws Error{InfeasibleMechanism} if no winning pair fits in m items.
Outcome taxation_outcome(const Valuation& v, const Valuation& u,
                         const PaymentSchedule& sched_alice, const PaymentSchedule& sched_bob);

struct AffineSpec {
  std::vector<Allocation2> range;
  Rat alpha_a{1};
  Rat alpha_b{1};
  std::map<Allocation2, Rat> betas;  ///< missing entries are 0
};

/// Every allocation (a, b) with a + b <= m.
std::vector<Allocation2> full_range(int m);

Allocation2 affine_outcome(const AffineSpec& spec, const Valuation& v, const Valuation& u);

/// Shared tie-break: true when `a` should be preferred over `b` at equal score.
bool prefer_on_tie(Allocation2 a, Allocation2 b);

using MechanismParams = std::variant<TriageParams, WvcgParams, ShiftedParams, FractionsParams>;

std::string family_name(const MechanismParams& params);
std::string describe(const MechanismParams& params);

/// Both schedules for a family, built from the opponent's report.
SchedulePair schedules(const MechanismParams& params, const Valuation& v, const Valuation& u);

Outcome run(const MechanismParams& params, const Valuation& v, const Valuation& u);

/// A two-bidder direct mechanism treated as a black box by the verifiers.
/// The schedule hooks are present for posted-price mechanisms and absent for
/// mechanisms (like first price) whose payments depend on the bidder's own report.
struct Mechanism {
  std::string name;
  std::function<Outcome(const Valuation&, const Valuation&)> run;
  std::function<PaymentSchedule(const Valuation& bob)> alice_prices;
  std::function<PaymentSchedule(const Valuation& alice)> bob_prices;

  bool has_schedules() const { return alice_prices && bob_prices; }
};

Mechanism make_mechanism(const MechanismParams& params);

/// Welfare-maximizing allocation with each winner paying her own bid. Not
/// truthful; used to check that the verifiers can see a violation.
Mechanism first_price_strawman();

}  // namespace multiunit
