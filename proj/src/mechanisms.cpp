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
#include "multiunit/mechanisms.hpp"

#include <sstream>

namespace multiunit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Rat> zero_prices(std::size_t m) { return std::vector<Rat>(m + 1); }

}  // namespace

bool satisfies_triage_constraints(const TriageParams& p) {
  const Rat one(1);
  return p.w.sign() > 0 && p.theta_a.sign() > 0 && p.theta_a <= one && p.theta_b.sign() > 0 &&
         p.theta_b <= one && p.theta_a >= one - p.theta_b;
}

TriageParams make_triage_params(Rat w, Rat theta_a, Rat theta_b) {
  TriageParams p{std::move(w), std::move(theta_a), std::move(theta_b)};
  if (!satisfies_triage_constraints(p)) {
    throw Error(Errc::ConstraintViolated, "triage needs w > 0, thetas in (0,1], thetaA >= 1 - thetaB; got (" +
                                              p.w.str() + ", " + p.theta_a.str() + ", " + p.theta_b.str() + ")");
  }
  return p;
}

ShiftedParams make_shifted_params(Rat alpha) {
  if (alpha.sign() <= 0 || alpha > Rat(1)) {
    throw Error(Errc::ConstraintViolated, "shift alpha must lie in (0, 1], got " + alpha.str());
  }
  return ShiftedParams{std::move(alpha)};
}

FractionsParams make_fractions_params(std::vector<Rat> alphas) {
  if (alphas.empty()) throw Error(Errc::ConstraintViolated, "fractions auction needs m - 1 >= 1 alphas");
  if (alphas.front().is_zero()) throw Error(Errc::ZeroAlpha, "alpha_1 = 0 leaves Alice's price undefined");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].sign() < 0 || alphas[i] > Rat(1)) {
      throw Error(Errc::ConstraintViolated, "alpha_" + std::to_string(i + 1) + " outside [0, 1]");
    }
    if (i > 0 && alphas[i] < alphas[i - 1]) {
      throw Error(Errc::ConstraintViolated, "alphas must be non-decreasing");
    }
  }
  return FractionsParams{std::move(alphas)};
}

PaymentSchedule triage_schedule(const Valuation& other, const TriageParams& params, Side side) {
  const std::size_t m = other.items();
  const bool bob = side == Side::ChargeBob;
  const Rat weight = bob ? params.w : Rat(1) / params.w;
  // high threshold on other(1)/other(m); low threshold on other(m-1)/other(m)
  const Rat& high = bob ? params.theta_a : params.theta_b;
  const Rat& low = bob ? params.theta_b : params.theta_a;
  const Rat one(1);

  std::vector<Rat> p = zero_prices(m);
  if (other[1] < high * other.top()) {
    p[m] = weight * other.top();
  } else {
    p[m] = weight * other[1] / high;
  }
  for (std::size_t k = 2; k + 1 <= m; ++k) p[k] = p[m] - weight * other[m - k];
  if (other[m - 1] > (one - low) * other.top()) {
    p[1] = p[m] - weight * other[m - 1];
  } else {
    p[1] = p[m] - weight * (one - low) * other.top();
  }
  return PaymentSchedule(std::move(p));
}

PaymentSchedule wvcg_schedule(const Valuation& other, const Rat& weight) {
  if (weight.sign() <= 0) throw Error(Errc::NonPositiveWeight, "weight must be > 0, got " + weight.str());
  const std::size_t m = other.items();
  std::vector<Rat> p = zero_prices(m);
  for (std::size_t t = 1; t <= m; ++t) p[t] = weight * (other.top() - other[m - t]);
  return PaymentSchedule(std::move(p));
}

PaymentSchedule shifted_schedule(const Valuation& other, const ShiftedParams& params) {
  const std::size_t m = other.items();
  std::vector<Rat> p = zero_prices(m);
  const Rat shifted_top = (Rat(1) + params.alpha) * other.top();
  for (std::size_t t = 1; t < m; ++t) p[t] = shifted_top - other[m - t];
  p[m] = other.top();
  return PaymentSchedule(std::move(p));
}

PaymentSchedule fractions_bob_schedule(const Valuation& v, const FractionsParams& params) {
  const std::size_t m = v.items();
  if (params.alphas.size() != m - 1) throw Error(Errc::LengthMismatch, "fractions auction needs m - 1 alphas");
  std::vector<Rat> p = zero_prices(m);
  for (std::size_t t = 1; t < m; ++t) p[t] = params.alphas[t - 1] * v.top();
  p[m] = v.top();
  return PaymentSchedule(std::move(p));
}

PaymentSchedule fractions_alice_schedule(const Valuation& u, const FractionsParams& params) {
  const std::size_t m = u.items();
  if (params.alphas.size() != m - 1) throw Error(Errc::LengthMismatch, "fractions auction needs m - 1 alphas");
  if (params.alphas.front().is_zero()) throw Error(Errc::ZeroAlpha, "alpha_1 = 0");
  std::vector<Rat> p = zero_prices(m);
  Rat running = u.top();
  for (std::size_t t = 1; t <= m; ++t) {
    const std::size_t k = m - t;  // newly admitted term u(k) / alpha_k; the k = 0 term is 0
    if (k > 0) running = max(running, u[k] / params.alphas[k - 1]);
    p[t] = running;
  }
  return PaymentSchedule(std::move(p));
}

SchedulePair fractions_schedules(const Valuation& v, const Valuation& u, const FractionsParams& params) {
  return SchedulePair{fractions_alice_schedule(u, params), fractions_bob_schedule(v, params)};
}

bool prefer_on_tie(Allocation2 a, Allocation2 b) {
  if (a.total() != b.total()) return a.total() > b.total();
  return a.alice > b.alice;
}

Outcome taxation_outcome(const Valuation& v, const Valuation& u, const PaymentSchedule& sched_alice,
                         const PaymentSchedule& sched_bob) {
  const std::size_t m = v.items();
  if (u.items() != m || sched_alice.items() != m || sched_bob.items() != m) {
    throw Error(Errc::LengthMismatch, "valuations and schedules must share m");
  }
  const auto wa = winning_set(v, sched_alice);
  const auto wb = winning_set(u, sched_bob);

  std::optional<Allocation2> best;
  Rat best_welfare;
  for (int s : wa) {
    for (int t : wb) {
      if (s + t > static_cast<int>(m)) continue;
      const Allocation2 cand{s, t};
      Rat welfare = v[s] + u[t];
      if (!best || welfare > best_welfare || (welfare == best_welfare && prefer_on_tie(cand, *best))) {
        best = cand;
        best_welfare = std::move(welfare);
      }
    }
  }
  if (!best) {
    std::ostringstream os;
    os << "no feasible winning pair for v=" << v.str() << " u=" << u.str() << " (Alice " << sched_alice.str()
       << ", Bob " << sched_bob.str() << ")";
    throw Error(Errc::InfeasibleMechanism, os.str());
  }
  return make_outcome(v, u, *best, sched_alice[best->alice], sched_bob[best->bob]);
}

std::vector<Allocation2> full_range(int m) {
  std::vector<Allocation2> out;
  for (int total = 0; total <= m; ++total) {
    for (int a = total; a >= 0; --a) out.push_back(Allocation2{a, total - a});
  }
  return out;
}

Allocation2 affine_outcome(const AffineSpec& spec, const Valuation& v, const Valuation& u) {
  if (spec.range.empty()) throw Error(Errc::ConstraintViolated, "affine range must be non-empty");
  if (spec.alpha_a.sign() < 0 || spec.alpha_b.sign() < 0 || (spec.alpha_a.is_zero() && spec.alpha_b.is_zero())) {
    throw Error(Errc::ConstraintViolated, "affine weights must be >= 0 and not both zero");
  }
  const int m = static_cast<int>(v.items());
  std::optional<Allocation2> best;
  Rat best_score;
  for (const auto& a : spec.range) {
    if (a.alice < 0 || a.bob < 0 || a.total() > m) throw Error(Errc::BadIndices, "allocation outside [0, m]");
    Rat score = spec.alpha_a * v[a.alice] + spec.alpha_b * u[a.bob];
    if (auto it = spec.betas.find(a); it != spec.betas.end()) score += it->second;
    if (!best || score > best_score || (score == best_score && prefer_on_tie(a, *best))) {
      best = a;
      best_score = std::move(score);
    }
  }
  return *best;
}

std::string family_name(const MechanismParams& params) {
  return std::visit(overloaded{
                        [](const TriageParams&) { return std::string("triage"); },
                        [](const WvcgParams&) { return std::string("vcg"); },
                        [](const ShiftedParams&) { return std::string("shifted"); },
                        [](const FractionsParams&) { return std::string("fractions"); },
                    },
                    params);
}

std::string describe(const MechanismParams& params) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const TriageParams& p) { os << "triage(w=" << p.w << ",thetaA=" << p.theta_a << ",thetaB=" << p.theta_b << ")"; },
                 [&](const WvcgParams& p) { os << "vcg(w=" << p.w << ")"; },
                 [&](const ShiftedParams& p) { os << "shifted(alpha=" << p.alpha << ")"; },
                 [&](const FractionsParams& p) {
                   os << "fractions(alphas=";
                   for (std::size_t i = 0; i < p.alphas.size(); ++i) os << (i ? "," : "") << p.alphas[i];
                   os << ")";
                 },
             },
             params);
  return os.str();
}

SchedulePair schedules(const MechanismParams& params, const Valuation& v, const Valuation& u) {
  return std::visit(overloaded{
                        [&](const TriageParams& p) {
                          return SchedulePair{triage_schedule(u, p, Side::ChargeAlice), triage_schedule(v, p, Side::ChargeBob)};
                        },
                        [&](const WvcgParams& p) {
                          return SchedulePair{wvcg_schedule(u, Rat(1) / p.w), wvcg_schedule(v, p.w)};
                        },
                        [&](const ShiftedParams& p) {
                          return SchedulePair{shifted_schedule(u, p), shifted_schedule(v, p)};
                        },
                        [&](const FractionsParams& p) { return fractions_schedules(v, u, p); },
                    },
                    params);
}

Outcome run(const MechanismParams& params, const Valuation& v, const Valuation& u) {
  if (v.items() != u.items()) throw Error(Errc::LengthMismatch, "bidders disagree on m");
  auto s = schedules(params, v, u);
  return taxation_outcome(v, u, s.alice, s.bob);
}

Mechanism make_mechanism(const MechanismParams& params) {
  Mechanism mech;
  mech.name = describe(params);
  mech.run = [params](const Valuation& v, const Valuation& u) { return run(params, v, u); };
  // Each schedule depends only on the opponent, so the unused argument is a placeholder.
  mech.alice_prices = [params](const Valuation& bob) { return schedules(params, bob, bob).alice; };
  mech.bob_prices = [params](const Valuation& alice) { return schedules(params, alice, alice).bob; };
  return mech;
}

Mechanism first_price_strawman() {
  Mechanism mech;
  mech.name = "strawman-firstprice";
  mech.run = [](const Valuation& v, const Valuation& u) {
    const auto opt = optimal_welfare2(v, u);
    return make_outcome(v, u, opt.allocation, v[opt.allocation.alice], u[opt.allocation.bob]);
  };
  return mech;
}

}  // namespace multiunit
