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
#include "multiunit/verify.hpp"

#include <sstream>

namespace multiunit {

namespace {

PropertyReport start(const char* property, const Mechanism& mech) {
  PropertyReport r;
  r.property = property;
  r.mechanism = mech.name;
  return r;
}

void fail(PropertyReport& r, Counterexample ce) {
  r.passed = false;
  r.counterexample = std::move(ce);
}

const Rat& utility_of(const Outcome& o, Bidder b) { return b == Bidder::Alice ? o.util_alice : o.util_bob; }

Outcome run_as(const Mechanism& mech, const Valuation& v, const Valuation& u, Bidder b, const Valuation& report) {
  return b == Bidder::Alice ? mech.run(report, u) : mech.run(v, report);
}

// Cheapest way a bidder can reach each bundle size by some report in the
// universe, with the opponent's report held fixed.
struct BundleMenu {
  std::vector<std::optional<Rat>> price;
  std::vector<std::size_t> witness;
};

// One truthfulness pass for `bidder`; returns false on first violation.
bool truthful_side(const Mechanism& mech, std::span<const Valuation> universe, Bidder bidder, PropertyReport& report) {
  const std::size_t n = universe.size();
  const std::size_t m = universe.front().items();
  std::vector<Outcome> column(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Valuation& other = universe[j];
    BundleMenu menu{std::vector<std::optional<Rat>>(m + 1), std::vector<std::size_t>(m + 1)};
    for (std::size_t i = 0; i < n; ++i) {
      column[i] = bidder == Bidder::Alice ? mech.run(universe[i], other) : mech.run(other, universe[i]);
      const int s = bidder == Bidder::Alice ? column[i].allocation.alice : column[i].allocation.bob;
      const Rat& pay = bidder == Bidder::Alice ? column[i].pay_alice : column[i].pay_bob;
      auto& best = menu.price[static_cast<std::size_t>(s)];
      if (!best || pay < *best) {
        best = pay;
        menu.witness[static_cast<std::size_t>(s)] = i;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Valuation& own = universe[i];
      const Rat& truthful = utility_of(column[i], bidder);
      for (std::size_t s = 0; s <= m; ++s) {
        if (!menu.price[s]) continue;
        Rat deviating = own[s] - *menu.price[s];
        if (deviating > truthful) {
          Counterexample ce{bidder == Bidder::Alice ? own : other,
                            bidder == Bidder::Alice ? other : own,
                            bidder,
                            universe[menu.witness[s]],
                            std::nullopt,
                            truthful,
                            std::move(deviating),
                            {}};
          std::ostringstream os;
          os << (bidder == Bidder::Alice ? "Alice" : "Bob") << " gains by reporting " << ce.misreport->str()
             << " (bundle " << s << ")";
          ce.detail = os.str();
          fail(report, std::move(ce));
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

PropertyReport check_truthfulness(const Mechanism& mech, std::span<const Valuation> universe) {
  auto r = start("truthful", mech);
  r.note = "misreports drawn from the instance universe";
  if (universe.empty()) return r;
  r.instances = universe.size() * universe.size();
  if (truthful_side(mech, universe, Bidder::Alice, r)) truthful_side(mech, universe, Bidder::Bob, r);
  return r;
}

PropertyReport check_truthfulness(const Mechanism& mech, const Grid& grid) {
  const auto universe = enumerate(grid);
  return check_truthfulness(mech, universe);
}

PropertyReport check_feasibility(const Mechanism& mech, std::span<const Valuation> universe) {
  auto r = start("feasible", mech);
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      ++r.instances;
      try {
        const auto o = mech.run(v, u);
        if (o.allocation.alice < 0 || o.allocation.bob < 0 || o.allocation.total() > static_cast<int>(v.items())) {
          fail(r, Counterexample{v, u, Bidder::Alice, {}, {}, {}, {},
                                 "allocation (" + std::to_string(o.allocation.alice) + "," +
                                     std::to_string(o.allocation.bob) + ") exceeds m"});
          return r;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::InfeasibleMechanism) throw;
        fail(r, Counterexample{v, u, Bidder::Alice, {}, {}, {}, {}, e.what()});
        return r;
      }
    }
  }
  return r;
}

PropertyReport check_feasibility(const Mechanism& mech, const Grid& grid) {
  const auto universe = enumerate(grid);
  return check_feasibility(mech, universe);
}

PropertyReport check_individual_rationality(const Mechanism& mech, std::span<const Valuation> universe) {
  auto r = start("ir", mech);
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      ++r.instances;
      const auto o = mech.run(v, u);
      if (o.util_alice.sign() < 0 || o.util_bob.sign() < 0) {
        const Bidder b = o.util_alice.sign() < 0 ? Bidder::Alice : Bidder::Bob;
        fail(r, Counterexample{v, u, b, {}, {}, utility_of(o, b), Rat(0), "negative truthful utility"});
        return r;
      }
    }
  }
  return r;
}

PropertyReport check_individual_rationality(const Mechanism& mech, const Grid& grid) {
  const auto universe = enumerate(grid);
  return check_individual_rationality(mech, universe);
}

PropertyReport check_allocation_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                            std::span<const Rat> factors) {
  auto r = start("allocation-scalable", mech);
  for (const auto& f : factors) {
    if (f.sign() <= 0) throw Error(Errc::NegativeInput, "scale factors must be > 0");
  }
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      const auto base = mech.run(v, u);
      for (const auto& f : factors) {
        ++r.instances;
        const auto scaled = mech.run(v.scaled(f), u.scaled(f));
        if (scaled.allocation != base.allocation) {
          fail(r, Counterexample{v, u, Bidder::Alice, {}, f, {}, {}, "allocation changes under scaling"});
          return r;
        }
      }
    }
  }
  return r;
}

PropertyReport check_payment_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                         std::span<const Rat> factors) {
  auto r = start("payment-scalable", mech);
  if (!mech.has_schedules()) r.note = "no posted schedules; charged payments only";
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      const auto base = mech.run(v, u);
      for (const auto& f : factors) {
        ++r.instances;
        const auto scaled = mech.run(v.scaled(f), u.scaled(f));
        if (scaled.allocation == base.allocation &&
            (scaled.pay_alice != base.pay_alice * f || scaled.pay_bob != base.pay_bob * f)) {
          fail(r, Counterexample{v, u, Bidder::Alice, {}, f, {}, {}, "charged payment does not scale"});
          return r;
        }
        if (mech.has_schedules()) {
          if (mech.alice_prices(u.scaled(f)) != mech.alice_prices(u).scaled(f)) {
            fail(r, Counterexample{v, u, Bidder::Alice, {}, f, {}, {}, "Alice's schedule does not scale"});
            return r;
          }
          if (mech.bob_prices(v.scaled(f)) != mech.bob_prices(v).scaled(f)) {
            fail(r, Counterexample{v, u, Bidder::Bob, {}, f, {}, {}, "Bob's schedule does not scale"});
            return r;
          }
        }
      }
    }
  }
  return r;
}

PropertyReport check_scalability(const Mechanism& mech, std::span<const Valuation> universe,
                                 std::span<const Rat> factors) {
  auto alloc = check_allocation_scalability(mech, universe, factors);
  auto pay = check_payment_scalability(mech, universe, factors);
  PropertyReport r = alloc.passed ? std::move(pay) : std::move(alloc);
  r.property = "scalable";
  r.instances = alloc.instances;
  return r;
}

PropertyReport check_scalability(const Mechanism& mech, const Grid& grid, std::span<const Rat> factors) {
  const auto universe = enumerate(grid);
  return check_scalability(mech, universe, factors);
}

Rat deviation_utility(const Mechanism& mech, const Valuation& v, const Valuation& u, Bidder bidder,
                      const Valuation& misreport) {
  const auto o = run_as(mech, v, u, bidder, misreport);
  return bidder == Bidder::Alice ? v[o.allocation.alice] - o.pay_alice : u[o.allocation.bob] - o.pay_bob;
}

bool replay(const Mechanism& mech, const PropertyReport& report) {
  if (report.passed || !report.counterexample) return false;
  const auto& ce = *report.counterexample;
  const auto& p = report.property;
  if (p == "truthful") {
    const auto truth = mech.run(ce.alice, ce.bob);
    return ce.misreport && deviation_utility(mech, ce.alice, ce.bob, ce.bidder, *ce.misreport) > utility_of(truth, ce.bidder);
  }
  if (p == "feasible") {
    try {
      const auto o = mech.run(ce.alice, ce.bob);
      return o.allocation.total() > static_cast<int>(ce.alice.items());
    } catch (const Error& e) {
      return e.code() == Errc::InfeasibleMechanism;
    }
  }
  if (p == "ir") {
    const auto o = mech.run(ce.alice, ce.bob);
    return o.util_alice.sign() < 0 || o.util_bob.sign() < 0;
  }
  if ((p == "scalable" || p == "allocation-scalable" || p == "payment-scalable") && ce.factor) {
    const Rat& f = *ce.factor;
    const auto base = mech.run(ce.alice, ce.bob);
    const auto scaled = mech.run(ce.alice.scaled(f), ce.bob.scaled(f));
    if (scaled.allocation != base.allocation) return true;
    if (scaled.pay_alice != base.pay_alice * f || scaled.pay_bob != base.pay_bob * f) return true;
    if (mech.has_schedules()) {
      return mech.alice_prices(ce.bob.scaled(f)) != mech.alice_prices(ce.bob).scaled(f) ||
             mech.bob_prices(ce.alice.scaled(f)) != mech.bob_prices(ce.alice).scaled(f);
    }
    return false;
  }
  return false;
}

SweepResult sweep_approximation(const Mechanism& mech, std::span<const Valuation> universe, bool keep_rows) {
  SweepResult result;
  result.mechanism = mech.name;
  for (const auto& v : universe) {
    for (const auto& u : universe) {
      ++result.instances;
      auto o = mech.run(v, u);
      auto opt = optimal_welfare2(v, u).welfare;
      std::optional<Rat> r;
      if (opt.is_zero() || o.welfare.sign() > 0) r = ratio(opt, o.welfare);
      if (!r) {
        if (!result.unbounded) {
          result.unbounded = true;
          result.worst = SweepRow{v, u, o, opt, r};
        }
      } else if (!result.unbounded && (!result.worst || *r > result.worst_ratio)) {
        result.worst_ratio = *r;
        result.worst = SweepRow{v, u, o, opt, r};
      }
      if (keep_rows) result.rows.push_back(SweepRow{v, u, std::move(o), std::move(opt), std::move(r)});
    }
  }
  return result;
}

SweepResult sweep_approximation(const Mechanism& mech, const Grid& grid, bool keep_rows) {
  const auto universe = enumerate(grid);
  return sweep_approximation(mech, universe, keep_rows);
}

}  // namespace multiunit
