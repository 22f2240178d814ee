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
#include <string_view>
#include <vector>

#include "doctest.h"
#include "multiunit/core.hpp"

namespace testing {

inline multiunit::Rat R(std::string_view s) { return multiunit::Rat::parse(s); }

// "0,3/2,5"
inline multiunit::Valuation V(std::string_view s) {
  std::vector<multiunit::Rat> xs;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    xs.push_back(R(s.substr(start, pos == s.npos ? s.npos : pos - start)));
    if (pos == s.npos) break;
    start = pos + 1;
  }
  return multiunit::Valuation(std::move(xs));
}

inline multiunit::PaymentSchedule S(std::string_view s) {
  std::vector<multiunit::Rat> xs;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    xs.push_back(R(s.substr(start, pos == s.npos ? s.npos : pos - start)));
    if (pos == s.npos) break;
    start = pos + 1;
  }
  return multiunit::PaymentSchedule(std::move(xs));
}

template <typename F>
multiunit::Errc error_code(F&& f) {
  try {
    f();
  } catch (const multiunit::Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return multiunit::Errc::Parse;
}

}  // namespace testing

#define CHECK_ERRC(expr, code) CHECK(::testing::error_code([&] { (void)(expr); }) == (code))
