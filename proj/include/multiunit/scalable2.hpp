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

#include <span>
#include <string>
#include <vector>

#include "multiunit/mechanisms.hpp"

namespace multiunit {

/// Normal form of a scalable 2-item mechanism, sampled on rational grids.
///
/// Bob facing Alice's report (0, r, 1) pays p(r) for two items and
/// f(r) p(r) for one; Alice facing (0, s, 1) pays q(s) and g(s) q(s).
/// By payment scalability this determines every schedule: the one for
/// (0, r x, x) is x times the one for (0, r, 1).
struct NormalFormSample {
  std::vector<Rat> rs;
  std::vector<Rat> p;
  std::vector<Rat> f;
  std::vector<Rat> ss;
  std::vector<Rat> q;
  std::vector<Rat> g;
};

/// Same constraints as TriageParams, read back from a normal form.
using FittedParams = TriageParams;

/// {0, 1/d, ..., 1}.
std::vector<Rat> unit_grid(int denominator);

/// Samples the normal form of a 2-item posted-price mechanism.
/// Throws Error{ZeroTwoItemPrice} where p or q vanishes (f, g undefined).
NormalFormSample extract_normal_form(const Mechanism& mech, std::span<const Rat> rs, std::span<const Rat> ss);

struct NormalFormPoint {
  Rat pay;   ///< p(r) or q(s)
  Rat frac;  ///< f(r) or g(s)

  friend bool operator==(const NormalFormPoint&, const NormalFormPoint&) = default;
};

/// Closed three-piece normal form of a Triage auction (low, mid and high range).
NormalFormPoint triage_normal_form(const TriageParams& params, const Rat& x, Side side);

/// The 2-item mechanism defined directly by the closed normal form, so it
/// can be compared schedule-for-schedule with the Triage payment rules.
Mechanism triage_normal_form_mechanism(const TriageParams& params);

/// (p(0), g(0), f(0)) without validation. Throws Error{MissingOrigin}.
FittedParams read_triage_params(const NormalFormSample& sample);
/// As above, then Error{ConstraintViolated} unless the values form valid TriageParams.
FittedParams fit_triage_params(const NormalFormSample& sample);

struct ProbeCheck {
  char id = '?';
  std::string name;
  bool passed = true;
  std::size_t points = 0;  ///< grid points or pairs evaluated
  std::string detail;      ///< first failing point
};

/// Evaluates the fourteen payment-function properties every 2-item scalable
/// truthful mechanism with ratio below 2 satisfies, exactly on the sample.
/// Throws Error{InsufficientSample} if the origin is missing, or a transition
/// point that lies inside [0, 1] was not sampled.
std::vector<ProbeCheck> probe_characterization(const NormalFormSample& sample, const FittedParams& fitted);

}  // namespace multiunit
