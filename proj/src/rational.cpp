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
#include "multiunit/rational.hpp"

#include <cctype>
#include <ostream>

#include "multiunit/error.hpp"

namespace multiunit {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw Error(Errc::Parse, "not a rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rat(mpq_class(q));
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::TooShort: return "TooShort";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::Negative: return "Negative";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::AchievedExceedsOpt: return "AchievedExceedsOpt";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::ZeroAlpha: return "ZeroAlpha";
    case Errc::InfeasibleMechanism: return "InfeasibleMechanism";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::BadIndices: return "BadIndices";
    case Errc::ZeroTwoItemPrice: return "ZeroTwoItemPrice";
    case Errc::MissingOrigin: return "MissingOrigin";
    case Errc::InsufficientSample: return "InsufficientSample";
    case Errc::InconsistentSamples: return "InconsistentSamples";
    case Errc::NotDegenerate: return "NotDegenerate";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace multiunit
