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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiunit/error.hpp"
#include "multiunit/rational.hpp"

namespace multiunit {

/// A bidder's private type over m identical items: values()[k] is the value
/// for receiving k items. Always normalized, non-decreasing and non-negative
/// with m >= 2.
class Valuation {
 public:
  /// Validating constructor; throws Error{TooShort, NotNormalized, Negative, NotMonotone}.
  explicit Valuation(std::vector<Rat> values);

  std::size_t items() const { return values_.size() - 1; }
  const Rat& operator[](std::size_t k) const { return values_[k]; }
  const Rat& top() const { return values_.back(); }
  std::span<const Rat> values() const { return values_; }

  /// Pointwise multiple by factor >= 0.
  Valuation scaled(const Rat& factor) const;
  std::string str() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Rat> values_;
};

Valuation make_valuation(std::vector<Rat> values);
Valuation make_valuation(std::initializer_list<Rat> values);

/// Per-bundle posted prices one bidder faces. prices[0] is always 0; prices
/// need not be monotone.
class PaymentSchedule {
 public:
  explicit PaymentSchedule(std::vector<Rat> prices);

  std::size_t items() const { return prices_.size() - 1; }
  const Rat& operator[](std::size_t k) const { return prices_[k]; }
  std::span<const Rat> prices() const { return prices_; }
  bool is_monotone() const;
  PaymentSchedule scaled(const Rat& factor) const;
  std::string str() const;

  friend bool operator==(const PaymentSchedule&, const PaymentSchedule&) = default;

 private:
  std::vector<Rat> prices_;
};

struct Allocation2 {
  int alice = 0;
  int bob = 0;

  int total() const { return alice + bob; }
  friend auto operator<=>(const Allocation2&, const Allocation2&) = default;
};

struct Outcome {
  Allocation2 allocation;
  Rat pay_alice;
  Rat pay_bob;
  Rat util_alice;
  Rat util_bob;
  Rat welfare;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Builds an Outcome from an allocation and payments, deriving utilities and
/// welfare from the true valuations.
Outcome make_outcome(const Valuation& v, const Valuation& u, Allocation2 alloc, Rat pay_alice, Rat pay_bob);

/// argmax_k { v(k) - sched(k) } in increasing order; never empty.
std::vector<int> winning_set(const Valuation& v, const PaymentSchedule& sched);

struct Optimum {
  Rat welfare;
  Allocation2 allocation;
};

/// max_k v(k) + u(m - k); ties go to the smallest k.
Optimum optimal_welfare2(const Valuation& v, const Valuation& u);

/// opt / achieved, with 0/0 defined as 1.
Rat ratio(const Rat& opt, const Rat& achieved);

}  // namespace multiunit
