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

#include "pcscore/percent.h"

#include <cmath>
#include <stdexcept>

namespace pcscore {
namespace {

std::uint64_t pow10(int decimals) {
  std::uint64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  return scale;
}

std::string render(std::uint64_t scaled, int decimals, bool negative) {
  std::uint64_t scale = pow10(decimals);
  std::string out = negative ? "-" : "";
  out += std::to_string(scaled / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % scale);
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace

double truncate_percent(double fraction, int decimals) {
  double scale = static_cast<double>(pow10(decimals));
  double units = std::fabs(fraction) * 100.0 * scale;
  // Absorb representation error such as 0.29 * 100 == 28.999999999999996.
  double truncated = std::floor(units * (1.0 + 1e-12) + 1e-9) / scale;
  return fraction < 0 ? -truncated : truncated;
}

std::string format_percent(double fraction, int decimals) {
  if (!std::isfinite(fraction)) return "n/a";
  if (decimals < 0 || decimals > 9) {
    throw std::invalid_argument("decimals out of range");
  }
  double scale = static_cast<double>(pow10(decimals));
  double units = std::fabs(fraction) * 100.0 * scale;
  auto scaled =
      static_cast<std::uint64_t>(std::floor(units * (1.0 + 1e-12) + 1e-9));
  return render(scaled, decimals, fraction < 0 && scaled > 0);
}

std::string format_count_percent(std::uint64_t numerator,
                                 std::uint64_t denominator, int decimals) {
  if (denominator == 0) return "n/a";
  if (decimals < 0 || decimals > 9) {
    throw std::invalid_argument("decimals out of range");
  }
  // numerator * 100 * 10^decimals may overflow for huge corpora; fall back to
  // long double there.
  std::uint64_t factor = 100 * pow10(decimals);
  if (numerator > UINT64_MAX / factor) {
    long double scaled = static_cast<long double>(numerator) * factor /
                         static_cast<long double>(denominator);
    return render(static_cast<std::uint64_t>(scaled), decimals, false);
  }
  return render(numerator * factor / denominator, decimals, false);
}

}  // namespace pcscore
