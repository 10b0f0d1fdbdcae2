// Copyright 2026 The pcscore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCSCORE_PERCENT_H_
#define PCSCORE_PERCENT_H_

#include <cstdint>
#include <string>

namespace pcscore {

// Formats a fraction as a percentage truncated (not rounded) toward zero to
// `decimals` places: 449.10 / 496.86 -> "90.38".
std::string format_percent(double fraction, int decimals = 2);

// Exact variant for integer ratios.
std::string format_count_percent(std::uint64_t numerator,
                                 std::uint64_t denominator, int decimals = 2);

// Truncated value, for comparisons at a table's printed precision.
double truncate_percent(double fraction, int decimals = 2);

}  // namespace pcscore

#endif  // PCSCORE_PERCENT_H_
