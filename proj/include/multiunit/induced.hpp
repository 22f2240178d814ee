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

#include <string>
#include <utility>
#include <vector>

#include "multiunit/scalable2.hpp"
#include "multiunit/verify.hpp"

namespace multiunit {

/// Thresholds mapping an m-item mechanism to a 2-item one: Alice's bundle
/// a counts as 0, 1 or 2 items by a < l1, l1 <= a < h1, a >= h1; Bob's
/// likewise with (l2, h2).
struct InducedIndex {
  int l1 = 1;
  int h1 = 2;
  int l2 = 1;
  int h2 = 2;

  std::string str() const;
  friend auto operator<=>(const InducedIndex&, const InducedIndex&) = default;
};

/// l1 < h1 <= m, l2 < h2 <= m, l1 + l2 <= m, l1 + h2 > m, l2 + h1 > m.
bool is_valid(const InducedIndex& idx, int m);
/// Every valid index, lexicographic in (l1, h1, l2, h2).
std::vector<InducedIndex> valid_indices(int m);

struct TwoItemValuation {
  Rat v1;
  Rat v2;
};

/// 0 below l, v1 on [l, h), v2 from h on. Throws Error{BadIndices}.
Valuation extend_valuation(const TwoItemValuation& v, int l, int h, int m);
/// Restriction of a 2-item Valuation, for callers holding one.
TwoItemValuation two_item(const Valuation& v);

/// Runs mechM on the extensions and maps bundle sizes back to {0, 1, 2}.
/// Payments carry over unchanged; utilities and welfare are recomputed on
/// the 2-item valuations. Throws Error{BadIndices}.
Outcome induced_outcome(const Mechanism& mech_m, int m, const InducedIndex& idx, const TwoItemValuation& v,
                        const TwoItemValuation& u);

/// The induced 2-item mechanism as a black box. Its schedules are read off
/// the m-item ones: Bob faces (0, f_l2(ext v), f_h2(ext v)), Alice faces
/// (0, g_l1(ext u), g_h1(ext u)).
Mechanism induced_mechanism(const Mechanism& mech_m, int m, const InducedIndex& idx);

/// Triage parameters of the induced mechanism from two probes of Bob's
/// induced prices: w = f_2(0, 1), thetaA = w / f_2(1, 1), thetaB = f_1(0, 1) / w.
/// Throws Error{BadIndices, ZeroTwoItemPrice, ConstraintViolated}.
FittedParams fit_induced_params(const Mechanism& mech_m, int m, const InducedIndex& idx);

/// Compares fitted parameters over index pairs. w must always agree. The
/// thetas must agree as well when the pair differs in h2 or h1 only (all
/// three), in l2 only (thetaA) or in l1 only (thetaB).
/// Throws Error{BadIndices} on an invalid index.
PropertyReport check_param_equalities(const Mechanism& mech_m, int m,
                                      const std::vector<std::pair<InducedIndex, InducedIndex>>& pairs);
/// Every unordered pair of valid indices.
std::vector<std::pair<InducedIndex, InducedIndex>> all_index_pairs(int m);

/// 0 below l, mid on [l, m), top at m. Throws Error{BadIndices} or a
/// Valuation error when mid > top.
Valuation make_simple(int l, const Rat& mid, const Rat& top, int m);
/// All l-simple valuations with 2 <= l < m, mid and top from the grid levels.
std::vector<Valuation> simple_valuations(const Grid& grid);

/// For every v with v(1) = 0: Bob's prices satisfy f_m(v) = w v(m) and
/// f_k(v) = w (v(m) - v(m - k)) for k outside {1, m - 1}; Alice's prices
/// the same with 1/w. Other valuations are skipped and counted in the note.
PropertyReport check_simple_payments(const Mechanism& mech_m, const Rat& w, std::span<const Valuation> valuations);

struct DegenerateWelfare {
  Allocation2 allocation;
  Rat weighted;        ///< v(a) + w u(b)
  Rat weighted_max;    ///< max_k v(k) + w u(m - k)
  Rat unweighted;      ///< v(a) + u(b)
  Rat unweighted_max;
  Rat swapped;         ///< w v(a) + u(b)
  Rat swapped_max;
};

DegenerateWelfare degenerate_welfare(const Mechanism& mech_m, const Rat& w, const Valuation& v, const Valuation& u);

/// Weighted welfare of the output equals max_k v(k) + w u(m - k). The note
/// carries all three readings. Throws Error{NotDegenerate}.
PropertyReport check_degenerate_welfare(const Mechanism& mech_m, const Rat& w, const Valuation& v,
                                        const Valuation& u);
/// The same over every pair of a universe of degenerate valuations; fails
/// on the first pair that breaks the weighted equality.
PropertyReport check_degenerate_welfare(const Mechanism& mech_m, const Rat& w, std::span<const Valuation> universe);

}  // namespace multiunit
