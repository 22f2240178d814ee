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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multiunit/core.hpp"

namespace multiunit::cli {

/// {"m": int, "valuations": [["0", "3", "5"], ...]}
struct InstanceFile {
  int m = 2;
  std::vector<Valuation> valuations;
};

/// Throws Error{Parse} on malformed JSON and the Valuation errors on bad vectors.
InstanceFile parse_instance_file(std::string_view text);
/// Canonical text; parse then format reproduces any file this function wrote.
std::string format_instance_file(const InstanceFile& file);

/// "0,3/2,5" -> (0, 3/2, 5).
Valuation parse_valuation(std::string_view text);

/// Entry point shared by the binary and the tests. args excludes the program
/// name. Returns 0 when everything passes, 1 on a property failure and 2 on
/// usage, parse or parameter errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multiunit::cli
