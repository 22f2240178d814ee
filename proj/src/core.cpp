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
#include "multiunit/core.hpp"

#include <sstream>

namespace multiunit {

namespace {

template <typename Range>
std::string join(const Range& xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

void require_same_items(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(Errc::LengthMismatch,
                "item counts differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Valuation::Valuation(std::vector<Rat> values) : values_(std::move(values)) {
  if (values_.size() < 3) throw Error(Errc::TooShort, "a valuation needs m >= 2 (length >= 3)");
  if (!values_[0].is_zero()) throw Error(Errc::NotNormalized, "v(0) = " + values_[0].str());
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k].sign() < 0) throw Error(Errc::Negative, "v(" + std::to_string(k) + ") < 0");
    if (values_[k] < values_[k - 1]) {
      throw Error(Errc::NotMonotone, "v(" + std::to_string(k) + ") < v(" + std::to_string(k - 1) + ")");
    }
  }
}

Valuation Valuation::scaled(const Rat& factor) const {
  if (factor.sign() < 0) throw Error(Errc::NegativeInput, "negative scale factor");
  std::vector<Rat> out;
  out.reserve(values_.size());
  for (const auto& x : values_) out.push_back(x * factor);
  return Valuation(std::move(out));
}

std::string Valuation::str() const { return join(values_); }

Valuation make_valuation(std::vector<Rat> values) { return Valuation(std::move(values)); }
Valuation make_valuation(std::initializer_list<Rat> values) { return Valuation(std::vector<Rat>(values)); }

PaymentSchedule::PaymentSchedule(std::vector<Rat> prices) : prices_(std::move(prices)) {
  if (prices_.size() < 3) throw Error(Errc::TooShort, "a schedule needs m >= 2 (length >= 3)");
  if (!prices_[0].is_zero()) throw Error(Errc::NotNormalized, "empty bundle price must be 0");
  for (std::size_t k = 1; k < prices_.size(); ++k) {
    if (prices_[k].sign() < 0) throw Error(Errc::Negative, "price(" + std::to_string(k) + ") < 0");
  }
}

bool PaymentSchedule::is_monotone() const {
  for (std::size_t k = 1; k < prices_.size(); ++k) {
    if (prices_[k] < prices_[k - 1]) return false;
  }
  return true;
}

PaymentSchedule PaymentSchedule::scaled(const Rat& factor) const {
  std::vector<Rat> out;
  out.reserve(prices_.size());
  for (const auto& x : prices_) out.push_back(x * factor);
  return PaymentSchedule(std::move(out));
}

std::string PaymentSchedule::str() const { return join(prices_); }

Outcome make_outcome(const Valuation& v, const Valuation& u, Allocation2 alloc, Rat pay_alice, Rat pay_bob) {
  Outcome o;
  o.allocation = alloc;
  o.util_alice = v[alloc.alice] - pay_alice;
  o.util_bob = u[alloc.bob] - pay_bob;
  o.welfare = v[alloc.alice] + u[alloc.bob];
  o.pay_alice = std::move(pay_alice);
  o.pay_bob = std::move(pay_bob);
  return o;
}

std::vector<int> winning_set(const Valuation& v, const PaymentSchedule& sched) {
  require_same_items(v.items(), sched.items());
  std::vector<int> best{0};
  Rat best_profit;  // bundle 0 at price 0
  for (std::size_t k = 1; k <= v.items(); ++k) {
    Rat profit = v[k] - sched[k];
    if (profit > best_profit) {
      best_profit = std::move(profit);
      best.assign(1, static_cast<int>(k));
    } else if (profit == best_profit) {
      best.push_back(static_cast<int>(k));
    }
  }
  return best;
}

Optimum optimal_welfare2(const Valuation& v, const Valuation& u) {
  require_same_items(v.items(), u.items());
  const int m = static_cast<int>(v.items());
  Optimum best{v[0] + u[m], Allocation2{0, m}};
  for (int k = 1; k <= m; ++k) {
    Rat w = v[k] + u[m - k];
    if (w > best.welfare) best = Optimum{std::move(w), Allocation2{k, m - k}};
  }
  return best;
}

Rat ratio(const Rat& opt, const Rat& achieved) {
  if (opt.sign() < 0 || achieved.sign() < 0) throw Error(Errc::NegativeInput, "welfare must be >= 0");
  if (achieved > opt) {
    throw Error(Errc::AchievedExceedsOpt, "achieved " + achieved.str() + " > optimum " + opt.str());
  }
  if (opt.is_zero()) return Rat(1);
  return opt / achieved;
}

}  // namespace multiunit
