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
#include "multiunit/scalable2.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace multiunit {

namespace {

Valuation unit_valuation(const Rat& r) { return Valuation({Rat(0), r, Rat(1)}); }

void require_two_items(const Valuation& v) {
  if (v.items() != 2) throw Error(Errc::LengthMismatch, "normal form is defined for m = 2 only");
}

std::optional<std::size_t> find(std::span<const Rat> xs, const Rat& x) {
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - xs.begin());
}

// One side of the sample: grid, two-item price, one-item fraction.
struct Curve {
  std::span<const Rat> xs;
  std::span<const Rat> pay;
  std::span<const Rat> frac;
  char name_pay;
  char name_frac;

  std::optional<std::size_t> at(const Rat& x) const { return find(xs, x); }
};

class CheckBuilder {
 public:
  CheckBuilder(char id, std::string name) { check_.id = id; check_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++check_.points;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.detail = describe();
    }
  }
  void fail(std::string detail) {
    check_.passed = false;
    if (check_.detail.empty()) check_.detail = std::move(detail);
  }
  ProbeCheck done() { return std::move(check_); }

 private:
  ProbeCheck check_;
};

std::string at_point(char fn, const Rat& x, const Rat& got, const Rat& want) {
  std::ostringstream os;
  os << fn << "(" << x << ") = " << got << ", expected " << want;
  return os.str();
}

}  // namespace

std::vector<Rat> unit_grid(int denominator) {
  if (denominator <= 0) throw Error(Errc::NegativeInput, "grid denominator must be positive");
  std::vector<Rat> out;
  for (int i = 0; i <= denominator; ++i) out.emplace_back(i, denominator);
  return out;
}

NormalFormSample extract_normal_form(const Mechanism& mech, std::span<const Rat> rs, std::span<const Rat> ss) {
  if (!mech.has_schedules()) throw Error(Errc::InsufficientSample, mech.name + " exposes no posted schedules");
  auto sorted = [](std::span<const Rat> xs) {
    std::vector<Rat> out(xs.begin(), xs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const auto& x : out) {
      if (x.sign() < 0 || x > Rat(1)) throw Error(Errc::BadIndices, "normal form argument outside [0, 1]");
    }
    return out;
  };
  NormalFormSample s;
  s.rs = sorted(rs);
  s.ss = sorted(ss);
  for (const auto& r : s.rs) {
    const auto sched = mech.bob_prices(unit_valuation(r));
    if (sched.items() != 2) throw Error(Errc::LengthMismatch, "normal form is defined for m = 2 only");
    if (sched[2].is_zero()) throw Error(Errc::ZeroTwoItemPrice, "p(" + r.str() + ") = 0");
    s.p.push_back(sched[2]);
    s.f.push_back(sched[1] / sched[2]);
  }
  for (const auto& x : s.ss) {
    const auto sched = mech.alice_prices(unit_valuation(x));
    if (sched[2].is_zero()) throw Error(Errc::ZeroTwoItemPrice, "q(" + x.str() + ") = 0");
    s.q.push_back(sched[2]);
    s.g.push_back(sched[1] / sched[2]);
  }
  return s;
}

NormalFormPoint triage_normal_form(const TriageParams& params, const Rat& x, Side side) {
  const bool bob = side == Side::ChargeBob;
  const Rat weight = bob ? params.w : Rat(1) / params.w;
  const Rat& high = bob ? params.theta_a : params.theta_b;
  const Rat& other = bob ? params.theta_b : params.theta_a;
  const Rat one(1);
  if (x >= high) return {weight * x / high, one - high};
  if (x <= one - other) return {weight, other};
  return {weight, one - x};
}

Mechanism triage_normal_form_mechanism(const TriageParams& params) {
  auto schedule = [params](const Valuation& other, Side side) {
    require_two_items(other);
    if (other.top().is_zero()) return PaymentSchedule({Rat(0), Rat(0), Rat(0)});
    const auto pt = triage_normal_form(params, other[1] / other.top(), side);
    return PaymentSchedule({Rat(0), other.top() * pt.frac * pt.pay, other.top() * pt.pay});
  };
  Mechanism mech;
  mech.name = "triage-normal-form(w=" + params.w.str() + ",thetaA=" + params.theta_a.str() +
              ",thetaB=" + params.theta_b.str() + ")";
  mech.alice_prices = [schedule](const Valuation& bob) { return schedule(bob, Side::ChargeAlice); };
  mech.bob_prices = [schedule](const Valuation& alice) { return schedule(alice, Side::ChargeBob); };
  mech.run = [schedule](const Valuation& v, const Valuation& u) {
    return taxation_outcome(v, u, schedule(u, Side::ChargeAlice), schedule(v, Side::ChargeBob));
  };
  return mech;
}

FittedParams read_triage_params(const NormalFormSample& sample) {
  const auto r0 = find(sample.rs, Rat(0));
  const auto s0 = find(sample.ss, Rat(0));
  if (!r0 || !s0) throw Error(Errc::MissingOrigin, "normal form sample lacks r = 0 or s = 0");
  return FittedParams{sample.p[*r0], sample.g[*s0], sample.f[*r0]};
}

FittedParams fit_triage_params(const NormalFormSample& sample) {
  auto fitted = read_triage_params(sample);
  if (!satisfies_triage_constraints(fitted)) {
    throw Error(Errc::ConstraintViolated, "fitted (w, thetaA, thetaB) = (" + fitted.w.str() + ", " +
                                              fitted.theta_a.str() + ", " + fitted.theta_b.str() +
                                              ") is not a triage parameter point");
  }
  return fitted;
}

std::vector<ProbeCheck> probe_characterization(const NormalFormSample& sample, const FittedParams& fitted) {
  const auto r0 = find(sample.rs, Rat(0));
  const auto s0 = find(sample.ss, Rat(0));
  if (!r0 || !s0) throw Error(Errc::InsufficientSample, "normal form sample lacks r = 0 or s = 0");
  const Rat one(1);
  const Rat& w = fitted.w;
  const Rat& ta = fitted.theta_a;
  const Rat& tb = fitted.theta_b;
  for (const auto& [theta, xs] : {std::pair{&ta, &sample.rs}, std::pair{&tb, &sample.ss}}) {
    if (theta->sign() >= 0 && *theta <= one && !find(*xs, *theta)) {
      throw Error(Errc::InsufficientSample, "transition point " + theta->str() + " not on the grid");
    }
  }

  // Bob-facing curve (p, f) is driven by Alice's thresholds; Alice-facing (q, g) mirrors it.
  const Curve bob{sample.rs, sample.p, sample.f, 'p', 'f'};
  const Curve alice{sample.ss, sample.q, sample.g, 'q', 'g'};
  struct Side2 {
    const Curve& self;
    const Curve& other;
    Rat weight;      // w for p, 1/w for q
    Rat own_theta;   // thetaA for f, thetaB for g
    Rat cross_theta;
    Rat pay0;        // p(0)
    Rat other_frac0; // g(0) for p
    Rat other_pay0;  // q(0) for p
  };
  const Side2 sides[2] = {
      {bob, alice, w, ta, tb, sample.p[*r0], sample.g[*s0], sample.q[*s0]},
      {alice, bob, one / w, tb, ta, sample.q[*s0], sample.f[*r0], sample.p[*r0]},
  };

  std::vector<ProbeCheck> out;

  {
    CheckBuilder c('a', "two-item price monotone non-decreasing");
    for (const auto& sd : sides) {
      for (std::size_t i = 1; i < sd.self.xs.size(); ++i) {
        c.expect(sd.self.pay[i - 1] <= sd.self.pay[i], [&] {
          return std::string(1, sd.self.name_pay) + " decreases at " + sd.self.xs[i].str();
        });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('b', "p(0) q(0) = 1");
    const Rat prod = sample.p[*r0] * sample.q[*s0];
    c.expect(prod == one, [&] { return "p(0) q(0) = " + prod.str(); });
    out.push_back(c.done());
  }
  {
    CheckBuilder c('c', "two-item price constant below the opponent's g(0)");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        if (sd.self.xs[i] < sd.other_frac0) {
          c.expect(sd.self.pay[i] == sd.pay0, [&] { return at_point(sd.self.name_pay, sd.self.xs[i], sd.self.pay[i], sd.pay0); });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('d', "p(r) >= r / (g(0) q(0))");
    for (const auto& sd : sides) {
      const Rat denom = sd.other_frac0 * sd.other_pay0;
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        if (denom.is_zero()) {
          c.fail("g(0) q(0) = 0");
          break;
        }
        const Rat bound = sd.self.xs[i] / denom;
        c.expect(sd.self.pay[i] >= bound, [&] { return at_point(sd.self.name_pay, sd.self.xs[i], sd.self.pay[i], bound); });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('e', "p(r) = r / (g(0) q(0)) above g(0)");
    for (const auto& sd : sides) {
      const Rat denom = sd.other_frac0 * sd.other_pay0;
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        if (sd.self.xs[i] <= sd.other_frac0 || denom.is_zero()) continue;
        const Rat want = sd.self.xs[i] / denom;
        c.expect(sd.self.pay[i] == want, [&] { return at_point(sd.self.name_pay, sd.self.xs[i], sd.self.pay[i], want); });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('f', "p = w up to thetaA, w r / thetaA beyond");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        const Rat& x = sd.self.xs[i];
        if (sd.own_theta.sign() <= 0) {
          c.fail("non-positive theta");
          break;
        }
        const Rat want = x <= sd.own_theta ? sd.weight : sd.weight * x / sd.own_theta;
        c.expect(sd.self.pay[i] == want, [&] { return at_point(sd.self.name_pay, x, sd.self.pay[i], want); });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('g', "f(r) <= thetaB for r <= thetaA");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        if (sd.self.xs[i] > sd.own_theta) continue;
        c.expect(sd.self.frac[i] <= sd.cross_theta, [&] { return at_point(sd.self.name_frac, sd.self.xs[i], sd.self.frac[i], sd.cross_theta) + " (upper bound)"; });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('h', "s <= f(r) iff r <= g(s)");
    for (std::size_t i = 0; i < sample.rs.size(); ++i) {
      if (sample.rs[i] > ta) continue;
      for (std::size_t j = 0; j < sample.ss.size(); ++j) {
        if (sample.ss[j] > tb) continue;
        const bool lhs = sample.ss[j] <= sample.f[i];
        const bool rhs = sample.rs[i] <= sample.g[j];
        c.expect(lhs == rhs, [&] { return "r = " + sample.rs[i].str() + ", s = " + sample.ss[j].str(); });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('i', "f non-increasing on r <= thetaA");
    for (const auto& sd : sides) {
      for (std::size_t i = 1; i < sd.self.xs.size(); ++i) {
        if (sd.self.xs[i] > sd.own_theta) break;
        c.expect(sd.self.frac[i] <= sd.self.frac[i - 1], [&] {
          return std::string(1, sd.self.name_frac) + " increases at " + sd.self.xs[i].str();
        });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('j', "Lipschitz bound f(r') - f(r) <= (r - r') f(r) / (1 - r)");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        const Rat& r = sd.self.xs[i];
        if (r >= sd.own_theta || r >= one) continue;
        for (std::size_t k = 0; k < i; ++k) {
          const Rat& rp = sd.self.xs[k];
          const Rat lhs = sd.self.frac[k] - sd.self.frac[i];
          const Rat rhs = (r - rp) * sd.self.frac[i] / (one - r);
          c.expect(lhs <= rhs, [&] {
            return std::string(1, sd.self.name_frac) + " drops too fast between " + rp.str() + " and " + r.str();
          });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('k', "f = 1 - r on the mid range, thetaB below it");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        const Rat& x = sd.self.xs[i];
        if (x > one - sd.cross_theta && x < sd.own_theta) {
          c.expect(sd.self.frac[i] == one - x, [&] { return at_point(sd.self.name_frac, x, sd.self.frac[i], one - x); });
        } else if (x < one - sd.cross_theta) {
          c.expect(sd.self.frac[i] == sd.cross_theta, [&] { return at_point(sd.self.name_frac, x, sd.self.frac[i], sd.cross_theta); });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('l', "g(f(r)) = r on the mid range");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        const Rat& x = sd.self.xs[i];
        if (!(x > one - sd.cross_theta && x < sd.own_theta)) continue;
        const auto j = sd.other.at(sd.self.frac[i]);
        if (!j) continue;  // f(r) off the opposite grid
        c.expect(sd.other.frac[*j] == x, [&] {
          return std::string(1, sd.other.name_frac) + "(" + sd.self.name_frac + "(" + x.str() + ")) = " + sd.other.frac[*j].str();
        });
      }
    }
    out.push_back(c.done());
  }
  {
    CheckBuilder c('m', "f(thetaA) = 1 - thetaA, g(thetaB) = 1 - thetaB");
    for (const auto& sd : sides) {
      const auto i = sd.self.at(sd.own_theta);
      if (!i) {
        c.fail("transition point " + sd.own_theta.str() + " outside [0, 1]");
        continue;
      }
      const Rat want = one - sd.own_theta;
      c.expect(sd.self.frac[*i] == want, [&] { return at_point(sd.self.name_frac, sd.own_theta, sd.self.frac[*i], want); });
    }
    out.push_back(c.done());
  }
  {
    // Here f is the one-item price in units of the weight, f(r) p(r) / w.
    CheckBuilder c('n', "one-item price / w = r / thetaA - r above thetaA");
    for (const auto& sd : sides) {
      for (std::size_t i = 0; i < sd.self.xs.size(); ++i) {
        const Rat& x = sd.self.xs[i];
        if (x <= sd.own_theta) continue;
        const Rat got = sd.self.frac[i] * sd.self.pay[i] / sd.weight;
        const Rat want = x / sd.own_theta - x;
        c.expect(got == want, [&] { return at_point(sd.self.name_frac, x, got, want); });
      }
    }
    out.push_back(c.done());
  }
  return out;
}

}  // namespace multiunit
