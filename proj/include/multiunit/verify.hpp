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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multiunit/grid.hpp"
#include "multiunit/mechanisms.hpp"

namespace multiunit {

enum class Bidder { Alice, Bob };

/// A single failing instance, complete enough to be replayed in isolation.
struct Counterexample {
  Valuation alice;
  Valuation bob;
  Bidder bidder = Bidder::Alice;
  std::optional<Valuation> misreport;  ///< truthfulness only
  std::optional<Rat> factor;           ///< scalability only
  Rat truthful_utility;
  Rat deviating_utility;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  std::string mechanism;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

// Every check runs over the universe squared (Alice x Bob). The Grid
// overloads enumerate the grid first.

/// Def. truthfulness over a finite misreport universe: for every instance and
/// every misreport drawn from the same universe, truthful utility is at least
/// the deviating one, for both bidders.
PropertyReport check_truthfulness(const Mechanism& mech, std::span<const Valuation> universe);
PropertyReport check_truthfulness(const Mechanism& mech, const Grid& grid);

/// No InfeasibleMechanism and never more than m items handed out.
PropertyReport check_feasibility(const Mechanism& mech, std::span<const Valuation> universe);
PropertyReport check_feasibility(const Mechanism& mech, const Grid& grid);

/// Truthful utilities are non-negative.
PropertyReport check_individual_rationality(const Mechanism& mech, std::span<const Valuation> universe);
PropertyReport check_individual_rationality(const Mechanism& mech, const Grid& grid);

/// Allocation unchanged when both reports are multiplied by a factor.
PropertyReport check_allocation_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                            std::span<const Rat> factors);
/// Charged payments, and posted schedules when the mechanism exposes them,
/// scale exactly with the opponent's report.
PropertyReport check_payment_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                         std::span<const Rat> factors);
/// Both of the above.
PropertyReport check_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                 std::span<const Rat> factors);
PropertyReport check_scalability(const Mechanism& mech, const Grid& grid, std::span<const Rat> factors);

/// Re-runs the mechanism on a counterexample; true if the violation reproduces.
bool replay(const Mechanism& mech, const PropertyReport& report);

/// Utility of `bidder` when reporting `misreport` instead of the truth.
Rat deviation_utility(const Mechanism& mech, const Valuation& v, const Valuation& u, Bidder bidder,
                      const Valuation& misreport);

struct SweepRow {
  Valuation alice;
  Valuation bob;
  Outcome outcome;
  Rat opt;
  std::optional<Rat> ratio;  ///< empty when the mechanism earns 0 against a positive optimum
};

struct SweepResult {
  std::string mechanism;
  std::size_t instances = 0;
  bool unbounded = false;
  Rat worst_ratio{1};
  std::optional<SweepRow> worst;
  std::vector<SweepRow> rows;  ///< filled only when requested
};

/// Worst OPT / ALG over the universe squared; first worst instance in
/// enumeration order is the witness. InfeasibleMechanism propagates.
SweepResult sweep_approximation(const Mechanism& mech, std::span<const Valuation> universe, bool keep_rows = false);
SweepResult sweep_approximation(const Mechanism& mech, const Grid& grid, bool keep_rows = false);

}  // namespace multiunit
