//  Copyright 2026 The neutro Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef NEUTRO_TOOLS_COMMANDS_HPP
#define NEUTRO_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "neutro/intervals.hpp"

namespace neutro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tab-separated kind x kind relation table for compare_ns at values a, b.
std::string inequality_table(const Real& a, const Real& b);

/// Seeded probe set for anomaly_check: values on a 1/1000 grid of the
/// span [a - (b-a)/2, b + (b-a)/2] with the endpoints a and b drawn often,
/// each with a uniformly chosen monad kind.
std::vector<NsNumber> anomaly_probes(const Real& a, const Real& b, std::size_t count, std::uint64_t seed);

}  // namespace neutro::cli

#endif  // NEUTRO_TOOLS_COMMANDS_HPP
