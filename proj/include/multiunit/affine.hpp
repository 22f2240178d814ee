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

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "multiunit/mechanisms.hpp"
#include "multiunit/grid.hpp"

namespace multiunit {

/// One observation of a deterministic mechanism.
struct AffineSample {
  Valuation alice;
  Valuation bob;
  Allocation2 chosen;
};

/// Which weight is pinned to 1. Alice-pinned covers every maximizer with
/// alphaA > 0, Bob-pinned covers alphaA = 0.
enum class Normalization { AlicePinned, BobPinned };

/// A weighted affine maximizer on `range` that reproduces every sample as a
/// weak argmax.
struct AffineCertificate {
  std::vector<Allocation2> range;
  Rat alpha_a;
  Rat alpha_b;
  std::map<Allocation2, Rat> betas;
  /// With beta == 0 the admissible alphaB / alphaA ratios form an interval;
  /// reported when the certificate came from that case. Upper end empty = unbounded.
  std::optional<std::pair<Rat, std::optional<Rat>>> ratio_interval;
};

/// One multiplier in an infeasibility proof: the inequality "sample `sample`
/// weakly prefers its chosen allocation over `alternative`".
struct WeightedRow {
  std::size_t sample = 0;
  Allocation2 alternative;
  Rat multiplier;
};

/// Farkas proof that no affine maximizer on `range` under `normalization`
/// reproduces the samples. `free_weight_multiplier` belongs to the row
/// "unpinned weight >= 0".
struct RangeRefutation {
  std::vector<Allocation2> range;
  Normalization normalization = Normalization::AlicePinned;
  std::vector<WeightedRow> rows;
  Rat free_weight_multiplier;
};

struct AffineVerdict {
  bool rationalizable = false;
  std::vector<Allocation2> outputs;  ///< distinct sampled allocations
  std::size_t ranges_checked = 0;
  std::optional<AffineCertificate> certificate;
  std::vector<RangeRefutation> refutations;  ///< one per (range, normalization) when not rationalizable
};

/// Tests every candidate range containing the sampled outputs (smallest
/// ranges first) for an affine maximizer reproducing the samples.
/// Throws Error{InconsistentSamples} if one input maps to two outputs.
AffineVerdict affine_witness(std::span<const AffineSample> samples);

/// Runs `mech` on universe^2 and records its allocations.
std::vector<AffineSample> collect_samples(const Mechanism& mech, std::span<const Valuation> universe);

/// Exact replays, independent of the LP.
bool certificate_reproduces(const AffineCertificate& cert, std::span<const AffineSample> samples);
bool refutation_holds(const RangeRefutation& ref, std::span<const AffineSample> samples);

}  // namespace multiunit
