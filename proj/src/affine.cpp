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
#include "multiunit/affine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "multiunit/lp.hpp"

namespace multiunit {

namespace {

struct Point {
  Rat da;  ///< v(chosen) - v(alternative) for Alice's bundles
  Rat db;  ///< same for Bob
  std::size_t sample;
};

Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a.da - o.da) * (b.db - o.db) - (a.db - o.db) * (b.da - o.da);
}

// Points that minimize alphaA*da + alphaB*db for some direction alpha >= 0.
// Every other point is implied by these, for any admissible weights.
std::vector<Point> lower_left_hull(std::vector<Point> pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.da != b.da) return a.da < b.da;
    return a.db < b.db;
  });
  std::vector<Point> stair;
  for (auto& p : pts) {
    if (stair.empty() || p.db < stair.back().db) stair.push_back(std::move(p));
  }
  std::vector<Point> hull;
  for (auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) hull.pop_back();
    hull.push_back(std::move(p));
  }
  return hull;
}

Point point_for(const AffineSample& s, Allocation2 alt, std::size_t index) {
  return Point{s.alice[s.chosen.alice] - s.alice[alt.alice], s.bob[s.chosen.bob] - s.bob[alt.bob], index};
}

// Variables: x[0] = unpinned weight, x[1..] = beta of range[1..] (beta of range[0] fixed at 0).
struct Layout {
  std::vector<Allocation2> range;
  Normalization norm;

  std::size_t vars() const { return range.size(); }
  std::optional<std::size_t> beta_index(Allocation2 a) const {
    for (std::size_t i = 1; i < range.size(); ++i) {
      if (range[i] == a) return i;
    }
    return std::nullopt;
  }
};

void row_for(const Layout& layout, const AffineSample& s, Allocation2 alt, lp::Vector& g, Rat& h) {
  g.assign(layout.vars(), Rat(0));
  const Rat da = s.alice[s.chosen.alice] - s.alice[alt.alice];
  const Rat db = s.bob[s.chosen.bob] - s.bob[alt.bob];
  const bool alice_pinned = layout.norm == Normalization::AlicePinned;
  g[0] = alice_pinned ? db : da;
  h = -(alice_pinned ? da : db);
  if (auto i = layout.beta_index(s.chosen)) g[*i] += Rat(1);
  if (auto i = layout.beta_index(alt)) g[*i] -= Rat(1);
}

void weight_row(const Layout& layout, lp::Vector& g, Rat& h) {
  g.assign(layout.vars(), Rat(0));
  g[0] = Rat(1);
  h = Rat(0);
}

using PairKey = std::pair<Allocation2, Allocation2>;

// Exact interval of the unpinned weight when every beta is zero.
std::optional<std::pair<Rat, std::optional<Rat>>> zero_beta_interval(const std::vector<const Point*>& pts,
                                                                     Normalization norm) {
  Rat lo(0);
  std::optional<Rat> hi;
  for (const Point* p : pts) {
    // constraint: pinned_diff + w * free_diff >= 0
    const Rat& pinned = norm == Normalization::AlicePinned ? p->da : p->db;
    const Rat& free = norm == Normalization::AlicePinned ? p->db : p->da;
    if (free.is_zero()) {
      if (pinned.sign() < 0) return std::nullopt;
      continue;
    }
    Rat bound = -pinned / free;
    if (free.sign() > 0) {
      lo = max(lo, bound);
    } else if (!hi || bound < *hi) {
      hi = std::move(bound);
    }
  }
  if (hi && *hi < lo) return std::nullopt;
  return std::make_pair(std::move(lo), std::move(hi));
}

// Smallest denominator in [lo, hi] (hi empty = unbounded), 0 <= lo <= hi.
Rat simplest_in(const Rat& lo, const std::optional<Rat>& hi) {
  const Rat whole = floor(lo);
  if (whole == lo) return lo;
  if (!hi || whole + Rat(1) <= *hi) return whole + Rat(1);
  return whole + Rat(1) / simplest_in(Rat(1) / (*hi - whole), Rat(1) / (lo - whole));
}

}  // namespace

std::vector<AffineSample> collect_samples(const Mechanism& mech, std::span<const Valuation> universe) {
  std::vector<AffineSample> out;
  out.reserve(universe.size() * universe.size());
  for (const auto& v : universe) {
    for (const auto& u : universe) out.push_back(AffineSample{v, u, mech.run(v, u).allocation});
  }
  return out;
}

AffineVerdict affine_witness(std::span<const AffineSample> samples) {
  AffineVerdict verdict;
  if (samples.empty()) throw Error(Errc::InsufficientSample, "no samples");
  const int m = static_cast<int>(samples.front().alice.items());
  const auto all = full_range(m);
  if (all.size() > 20) throw Error(Errc::InsufficientSample, "range enumeration limited to small m");

  {
    std::map<std::pair<std::vector<Rat>, std::vector<Rat>>, Allocation2> seen;
    for (const auto& s : samples) {
      if (static_cast<int>(s.alice.items()) != m || static_cast<int>(s.bob.items()) != m) {
        throw Error(Errc::LengthMismatch, "samples disagree on m");
      }
      auto key = std::make_pair(std::vector<Rat>(s.alice.values().begin(), s.alice.values().end()),
                                std::vector<Rat>(s.bob.values().begin(), s.bob.values().end()));
      auto [it, inserted] = seen.emplace(std::move(key), s.chosen);
      if (!inserted && it->second != s.chosen) {
        throw Error(Errc::InconsistentSamples, "input v=" + s.alice.str() + " u=" + s.bob.str() + " has two outputs");
      }
    }
  }

  std::uint32_t output_mask = 0;
  for (const auto& s : samples) {
    const auto it = std::find(all.begin(), all.end(), s.chosen);
    if (it == all.end()) throw Error(Errc::BadIndices, "sampled allocation outside the feasible set");
    output_mask |= 1u << static_cast<unsigned>(it - all.begin());
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (output_mask & (1u << i)) verdict.outputs.push_back(all[i]);
  }

  // Reduced constraint rows for every ordered (chosen, alternative) pair.
  std::map<PairKey, std::vector<Point>> hulls;
  {
    std::map<PairKey, std::vector<Point>> raw;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (const auto& alt : all) {
        if (alt != samples[i].chosen) raw[{samples[i].chosen, alt}].push_back(point_for(samples[i], alt, i));
      }
    }
    for (auto& [key, pts] : raw) hulls.emplace(key, lower_left_hull(std::move(pts)));
  }

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if ((mask & output_mask) == output_mask) masks.push_back(mask);
  }
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  for (const auto mask : masks) {
    ++verdict.ranges_checked;
    std::vector<Allocation2> range;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask & (1u << i)) range.push_back(all[i]);
    }

    std::vector<std::pair<PairKey, const Point*>> rows;
    std::vector<const Point*> pts;
    for (const auto& a : range) {
      for (const auto& b : range) {
        if (a == b) continue;
        auto it = hulls.find({a, b});
        if (it == hulls.end()) continue;
        for (const auto& p : it->second) {
          rows.emplace_back(it->first, &p);
          pts.push_back(&p);
        }
      }
    }

    for (const auto norm : {Normalization::AlicePinned, Normalization::BobPinned}) {
      auto interval = zero_beta_interval(pts, norm);
      if (!interval) continue;
      AffineCertificate cert;
      cert.range = range;
      const bool alice_pinned = norm == Normalization::AlicePinned;
      // Any point of the interval works; report the simplest one.
      Rat free = simplest_in(interval->first, interval->second);
      cert.alpha_a = alice_pinned ? Rat(1) : free;
      cert.alpha_b = alice_pinned ? free : Rat(1);
      if (alice_pinned) {
        cert.ratio_interval = interval;
      } else {
        std::optional<Rat> hi;
        if (interval->first.sign() > 0) hi = Rat(1) / interval->first;
        Rat lo = interval->second ? Rat(1) / *interval->second : Rat(0);
        cert.ratio_interval = std::make_pair(std::move(lo), std::move(hi));
      }
      for (const auto& a : range) cert.betas[a] = Rat(0);
      verdict.rationalizable = true;
      verdict.certificate = std::move(cert);
      return verdict;
    }

    std::vector<RangeRefutation> local;
    for (const auto norm : {Normalization::AlicePinned, Normalization::BobPinned}) {
      const Layout layout{range, norm};
      lp::Matrix g;
      lp::Vector h;
      for (const auto& [key, p] : rows) {
        g.emplace_back();
        h.emplace_back();
        row_for(layout, samples[p->sample], key.second, g.back(), h.back());
      }
      g.emplace_back();
      h.emplace_back();
      weight_row(layout, g.back(), h.back());

      auto res = lp::solve_inequalities(g, h);
      if (auto* feasible = std::get_if<lp::FeasiblePoint>(&res)) {
        AffineCertificate cert;
        cert.range = range;
        cert.alpha_a = norm == Normalization::AlicePinned ? Rat(1) : feasible->x[0];
        cert.alpha_b = norm == Normalization::AlicePinned ? feasible->x[0] : Rat(1);
        cert.betas[range[0]] = Rat(0);
        for (std::size_t i = 1; i < range.size(); ++i) cert.betas[range[i]] = feasible->x[i];
        verdict.rationalizable = true;
        verdict.certificate = std::move(cert);
        return verdict;
      }
      const auto& y = std::get<lp::InfeasibilityProof>(res).multipliers;
      RangeRefutation ref;
      ref.range = range;
      ref.normalization = norm;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (y[i].is_zero()) continue;
        ref.rows.push_back(WeightedRow{rows[i].second->sample, rows[i].first.second, y[i]});
      }
      ref.free_weight_multiplier = y.back();
      local.push_back(std::move(ref));
    }
    for (auto& r : local) verdict.refutations.push_back(std::move(r));
  }
  return verdict;
}

bool certificate_reproduces(const AffineCertificate& cert, std::span<const AffineSample> samples) {
  if (cert.alpha_a.sign() < 0 || cert.alpha_b.sign() < 0 || (cert.alpha_a.is_zero() && cert.alpha_b.is_zero())) {
    return false;
  }
  auto score = [&](const AffineSample& s, Allocation2 a) {
    Rat x = cert.alpha_a * s.alice[a.alice] + cert.alpha_b * s.bob[a.bob];
    if (auto it = cert.betas.find(a); it != cert.betas.end()) x += it->second;
    return x;
  };
  for (const auto& s : samples) {
    if (std::find(cert.range.begin(), cert.range.end(), s.chosen) == cert.range.end()) return false;
    const Rat chosen = score(s, s.chosen);
    for (const auto& a : cert.range) {
      if (score(s, a) > chosen) return false;
    }
  }
  return true;
}

bool refutation_holds(const RangeRefutation& ref, std::span<const AffineSample> samples) {
  if (ref.range.empty()) return false;
  const Layout layout{ref.range, ref.normalization};
  lp::Matrix g;
  lp::Vector h;
  lp::Vector y;
  for (const auto& row : ref.rows) {
    if (row.sample >= samples.size()) return false;
    const auto& s = samples[row.sample];
    const auto in_range = [&](Allocation2 a) {
      return std::find(ref.range.begin(), ref.range.end(), a) != ref.range.end();
    };
    if (!in_range(s.chosen) || !in_range(row.alternative) || s.chosen == row.alternative) return false;
    g.emplace_back();
    h.emplace_back();
    row_for(layout, s, row.alternative, g.back(), h.back());
    y.push_back(row.multiplier);
  }
  g.emplace_back();
  h.emplace_back();
  weight_row(layout, g.back(), h.back());
  y.push_back(ref.free_weight_multiplier);
  return lp::proves_infeasible(g, h, y);
}

}  // namespace multiunit
