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

#ifndef PCSCORE_REPORT_IO_H_
#define PCSCORE_REPORT_IO_H_

#include <string>
#include <string_view>

#include "pcscore/corpus.h"

namespace pcscore {

// Canonical JSON: sorted keys, counts plus full-precision rates, one line.
// Derived fields (rates, breakdown) are recomputed on parse, so
// report_to_json(report_from_json(s)) == s for any s this function produced.
std::string report_to_json(const CorpusReport& report);
CorpusReport report_from_json(std::string_view json_text);

// Tab-separated summary: metric, rate, errors, denominator.
std::string report_to_tsv(const CorpusReport& report);

// Human-readable summary with percentages at two decimals.
std::string report_to_table(const CorpusReport& report);

// Per-mark table with one column per mark.
std::string breakdown_to_table(const Breakdown& breakdown);
std::string breakdown_to_json(const Breakdown& breakdown);
std::string breakdown_to_tsv(const Breakdown& breakdown);

}  // namespace pcscore

#endif  // PCSCORE_REPORT_IO_H_
