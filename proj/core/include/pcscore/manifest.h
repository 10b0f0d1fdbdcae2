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

#ifndef PCSCORE_MANIFEST_H_
#define PCSCORE_MANIFEST_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcscore {

// One line of a JSON Lines manifest.
struct SampleRecord {
  std::string id;
  std::string text;                      // reference, with case and punctuation
  std::optional<std::string> pred_text;  // hypothesis
  std::optional<double> duration;        // seconds
  // Unrecognized fields as (key, serialized JSON value), in key order.
  std::vector<std::pair<std::string, std::string>> extra;
  std::size_t line = 0;  // 1-based source line, 0 if synthesized

  bool has_hypothesis() const { return pred_text.has_value(); }
  // Unquoted string value of an extra field, if present and a string.
  std::optional<std::string> extra_string(std::string_view key) const;
};

// Parses a manifest. Blank lines are skipped, CRLF is accepted. Throws
// ManifestError naming the line for malformed JSON, a missing or non-string
// "text", a negative duration, or a duplicate "id". A missing "id" defaults
// to the line number.
std::vector<SampleRecord> parse_manifest(std::istream& in);
std::vector<SampleRecord> load_manifest(const std::filesystem::path& path);

// Writes records back as JSON Lines with keys in lexicographic order.
void write_manifest(std::ostream& out, std::span<const SampleRecord> records);
std::string to_json_line(const SampleRecord& record);

}  // namespace pcscore

#endif  // PCSCORE_MANIFEST_H_
