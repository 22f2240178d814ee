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

#include <algorithm>
#include <map>
#include <sstream>

namespace multiunit {

namespace {

void require_valid(const InducedIndex& idx, int m) {
  if (!is_valid(idx, m)) {
    throw Error(Errc::BadIndices, "index " + idx.str() + " is not valid for m = " + std::to_string(m));
  }
}

int collapse(int bundle, int l, int h) {
  if (bundle < l) return 0;
  if (bundle < h) return 1;
  return 2;
}

Valuation as_valuation(const TwoItemValuation& v) { return Valuation({Rat(0), v.v1, v.v2}); }

std::string params_str(const FittedParams& p) {
  return "(" + p.w.str() + ", " + p.theta_a.str() + ", " + p.theta_b.str() + ")";
}

}  // namespace

std::string InducedIndex::str() const {
  std::ostringstream os;
  os << "(" << l1 << "," << h1 << "," << l2 << "," << h2 << ")";
  return os.str();
}

bool is_valid(const InducedIndex& idx, int m) {
  return idx.l1 >= 1 && idx.l2 >= 1 && idx.l1 < idx.h1 && idx.h1 <= m && idx.l2 < idx.h2 && idx.h2 <= m &&
         idx.l1 + idx.l2 <= m && idx.l1 + idx.h2 > m && idx.l2 + idx.h1 > m;
}

std::vector<InducedIndex> valid_indices(int m) {
  std::vector<InducedIndex> out;
  for (int l1 = 1; l1 <= m; ++l1)
    for (int h1 = l1 + 1; h1 <= m; ++h1)
      for (int l2 = 1; l2 <= m; ++l2)
        for (int h2 = l2 + 1; h2 <= m; ++h2) {
          const InducedIndex idx{l1, h1, l2, h2};
          if (is_valid(idx, m)) out.push_back(idx);
        }
  return out;
}

Valuation extend_valuation(const TwoItemValuation& v, int l, int h, int m) {
  if (!(1 <= l && l < h && h <= m)) {
    throw Error(Errc::BadIndices, "extension needs 1 <= l < h <= m");
  }
  std::vector<Rat> values;
  values.reserve(m + 1);
  for (int k = 0; k <= m; ++k) values.push_back(k < l ? Rat(0) : k < h ? v.v1 : v.v2);
  return Valuation(std::move(values));
}

TwoItemValuation two_item(const Valuation& v) {
  if (v.items() != 2) throw Error(Errc::LengthMismatch, "expected a 2-item valuation");
  return {v[1], v[2]};
}

Outcome induced_outcome(const Mechanism& mech_m, int m, const InducedIndex& idx, const TwoItemValuation& v,
                        const TwoItemValuation& u) {
  require_valid(idx, m);
  const Outcome big = mech_m.run(extend_valuation(v, idx.l1, idx.h1, m), extend_valuation(u, idx.l2, idx.h2, m));
  const Allocation2 alloc{collapse(big.allocation.alice, idx.l1, idx.h1),
                          collapse(big.allocation.bob, idx.l2, idx.h2)};
  return make_outcome(as_valuation(v), as_valuation(u), alloc, big.pay_alice, big.pay_bob);
}

Mechanism induced_mechanism(const Mechanism& mech_m, int m, const InducedIndex& idx) {
  require_valid(idx, m);
  Mechanism mech;
  mech.name = mech_m.name + "^" + idx.str();
  mech.run = [mech_m, m, idx](const Valuation& v, const Valuation& u) {
    return induced_outcome(mech_m, m, idx, two_item(v), two_item(u));
  };
  if (mech_m.has_schedules()) {
    mech.bob_prices = [mech_m, m, idx](const Valuation& alice) {
      const auto big = mech_m.bob_prices(extend_valuation(two_item(alice), idx.l1, idx.h1, m));
      return PaymentSchedule({Rat(0), big[idx.l2], big[idx.h2]});
    };
    mech.alice_prices = [mech_m, m, idx](const Valuation& bob) {
      const auto big = mech_m.alice_prices(extend_valuation(two_item(bob), idx.l2, idx.h2, m));
      return PaymentSchedule({Rat(0), big[idx.l1], big[idx.h1]});
    };
  }
  return mech;
}

FittedParams fit_induced_params(const Mechanism& mech_m, int m, const InducedIndex& idx) {
  const Mechanism induced = induced_mechanism(mech_m, m, idx);
  if (!induced.has_schedules()) throw Error(Errc::InsufficientSample, mech_m.name + " exposes no posted schedules");
  const auto at01 = induced.bob_prices(make_valuation({0, 0, 1}));
  const auto at11 = induced.bob_prices(make_valuation({0, 1, 1}));
  if (at01[2].is_zero() || at11[2].is_zero()) {
    throw Error(Errc::ZeroTwoItemPrice, "induced two-item price vanishes at " + idx.str());
  }
  FittedParams fitted{at01[2], at01[2] / at11[2], at01[1] / at01[2]};
  if (!satisfies_triage_constraints(fitted)) {
    throw Error(Errc::ConstraintViolated,
                "induced mechanism " + idx.str() + " fits " + params_str(fitted) + ", not a triage point");
  }
  return fitted;
}

PropertyReport check_param_equalities(const Mechanism& mech_m, int m,
                                      const std::vector<std::pair<InducedIndex, InducedIndex>>& pairs) {
  PropertyReport report;
  report.property = "induced-parameter-equalities";
  report.mechanism = mech_m.name;
  std::map<InducedIndex, FittedParams> cache;
  auto fit = [&](const InducedIndex& idx) -> const FittedParams& {
    require_valid(idx, m);
    auto it = cache.find(idx);
    if (it == cache.end()) it = cache.emplace(idx, fit_induced_params(mech_m, m, idx)).first;
    return it->second;
  };
  for (const auto& [a, b] : pairs) {
    const auto& pa = fit(a);
    const auto& pb = fit(b);
    ++report.instances;
    const bool same_l = a.l1 == b.l1 && a.l2 == b.l2;
    const bool only_h = same_l && (a.h1 == b.h1) != (a.h2 == b.h2);
    const bool only_l2 = a.l1 == b.l1 && a.h1 == b.h1 && a.h2 == b.h2 && a.l2 != b.l2;
    const bool only_l1 = a.l2 == b.l2 && a.h1 == b.h1 && a.h2 == b.h2 && a.l1 != b.l1;
    std::string broken;
    if (pa.w != pb.w) broken = "w";
    else if ((only_h || only_l2) && pa.theta_a != pb.theta_a) broken = "thetaA";
    else if ((only_h || only_l1) && pa.theta_b != pb.theta_b) broken = "thetaB";
    if (!broken.empty()) {
      report.passed = false;
      report.note = broken + " differs: " + a.str() + " -> " + params_str(pa) + ", " + b.str() + " -> " +
                    params_str(pb);
      return report;
    }
  }
  report.note = std::to_string(cache.size()) + " indices fitted";
  return report;
}

std::vector<std::pair<InducedIndex, InducedIndex>> all_index_pairs(int m) {
  const auto idx = valid_indices(m);
  std::vector<std::pair<InducedIndex, InducedIndex>> out;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) out.emplace_back(idx[i], idx[j]);
  return out;
}

Valuation make_simple(int l, const Rat& mid, const Rat& top, int m) {
  if (!(0 < l && l < m)) throw Error(Errc::BadIndices, "simple valuation needs 0 < l < m");
  std::vector<Rat> values(m + 1, Rat(0));
  for (int k = l; k < m; ++k) values[k] = mid;
  values[m] = top;
  return Valuation(std::move(values));
}

std::vector<Valuation> simple_valuations(const Grid& grid) {
  std::vector<Rat> levels;
  for (Rat x(0); x <= grid.max_value; x = x + Rat(1, grid.denominator)) levels.push_back(x);
  std::vector<Valuation> out;
  for (int l = 2; l < grid.m; ++l)
    for (std::size_t i = 0; i < levels.size(); ++i)
      for (std::size_t j = i; j < levels.size(); ++j) out.push_back(make_simple(l, levels[i], levels[j], grid.m));
  return out;
}

PropertyReport check_simple_payments(const Mechanism& mech_m, const Rat& w, std::span<const Valuation> valuations) {
  PropertyReport report;
  report.property = "simple-payments";
  report.mechanism = mech_m.name;
  if (!mech_m.has_schedules()) {
    report.passed = false;
    report.note = "mechanism exposes no posted schedules";
    return report;
  }
  std::size_t skipped = 0;
  for (const auto& v : valuations) {
    if (!v[1].is_zero()) {
      ++skipped;
      continue;
    }
    ++report.instances;
    const std::size_t m = v.items();
    const auto bob = mech_m.bob_prices(v);
    const auto alice = mech_m.alice_prices(v);
    for (std::size_t k = 2; k <= m; ++k) {
      if (k == m - 1) continue;
      const Rat diff = v.top() - v[m - k];
      for (const auto& [sched, weight, who] :
           {std::tuple{&bob, w, "f"}, std::tuple{&alice, Rat(1) / w, "g"}}) {
        const Rat want = weight * diff;
        if ((*sched)[k] != want) {
          report.passed = false;
          report.counterexample = Counterexample{v, v, std::string(who) == "f" ? Bidder::Bob : Bidder::Alice,
                                                 std::nullopt, std::nullopt, want, (*sched)[k], ""};
          report.counterexample->detail = std::string(who) + "_" + std::to_string(k) + v.str() + " = " +
                                          (*sched)[k].str() + ", expected " + want.str();
          report.note = report.counterexample->detail;
          return report;
        }
      }
    }
  }
  report.note = std::to_string(skipped) + " valuations with v(1) > 0 skipped";
  return report;
}

DegenerateWelfare degenerate_welfare(const Mechanism& mech_m, const Rat& w, const Valuation& v, const Valuation& u) {
  if (v.items() != u.items()) throw Error(Errc::LengthMismatch, "valuations over different item counts");
  if (v.items() <= 2 || !is_degenerate(v) || !is_degenerate(u)) {
    throw Error(Errc::NotDegenerate, v.str() + " / " + u.str() + " is not a degenerate pair with m > 2");
  }
  const int m = static_cast<int>(v.items());
  const Outcome out = mech_m.run(v, u);
  const int a = out.allocation.alice;
  const int b = out.allocation.bob;
  DegenerateWelfare dw{out.allocation, v[a] + w * u[b], Rat(0), v[a] + u[b], Rat(0), w * v[a] + u[b], Rat(0)};
  for (int k = 0; k <= m; ++k) {
    dw.weighted_max = max(dw.weighted_max, v[k] + w * u[m - k]);
    dw.unweighted_max = max(dw.unweighted_max, v[k] + u[m - k]);
    dw.swapped_max = max(dw.swapped_max, w * v[k] + u[m - k]);
  }
  return dw;
}

PropertyReport check_degenerate_welfare(const Mechanism& mech_m, const Rat& w, const Valuation& v,
                                        const Valuation& u) {
  const auto dw = degenerate_welfare(mech_m, w, v, u);
  PropertyReport report;
  report.property = "degenerate-welfare";
  report.mechanism = mech_m.name;
  report.instances = 1;
  report.passed = dw.weighted == dw.weighted_max;
  std::ostringstream os;
  os << "allocation (" << dw.allocation.alice << "," << dw.allocation.bob << "); v+w*u " << dw.weighted << "/"
     << dw.weighted_max << "; v+u " << dw.unweighted << "/" << dw.unweighted_max << "; w*v+u " << dw.swapped
     << "/" << dw.swapped_max;
  report.note = os.str();
  if (!report.passed) {
    report.counterexample = Counterexample{v, u, Bidder::Alice, std::nullopt, std::nullopt, dw.weighted_max,
                                           dw.weighted, report.note};
  }
  return report;
}

PropertyReport check_degenerate_welfare(const Mechanism& mech_m, const Rat& w, std::span<const Valuation> universe) {
  PropertyReport total;
  total.property = "degenerate-welfare";
  total.mechanism = mech_m.name;
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      auto one = check_degenerate_welfare(mech_m, w, v, u);
      ++total.instances;
      if (!one.passed) {
        total.passed = false;
        total.counterexample = std::move(one.counterexample);
        total.note = one.note;
        return total;
      }
    }
  }
  return total;
}

}  // namespace multiunit
