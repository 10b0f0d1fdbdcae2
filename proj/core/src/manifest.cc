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

#include "pcscore/manifest.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "pcscore/errors.h"

namespace pcscore {

using nlohmann::json;

std::optional<std::string> SampleRecord::extra_string(
    std::string_view key) const {
  for (const auto& [k, v] : extra) {
    if (k != key) continue;
    json value = json::parse(v, nullptr, false);
    if (value.is_string()) return value.get<std::string>();
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<SampleRecord> parse_manifest(std::istream& in) {
  std::vector<SampleRecord> records;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ManifestError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw ManifestError("expected a JSON object", line_no);

    SampleRecord rec;
    rec.line = line_no;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      const std::string& key = it.key();
      const json& value = it.value();
      if (key == "id") {
        if (value.is_string()) {
          rec.id = value.get<std::string>();
        } else if (value.is_number_integer()) {
          rec.id = value.dump();
        } else {
          throw ManifestError("\"id\" must be a string", line_no);
        }
      } else if (key == "text") {
        if (!value.is_string()) {
          throw ManifestError("\"text\" must be a string", line_no);
        }
        rec.text = value.get<std::string>();
      } else if (key == "pred_text") {
        if (value.is_null()) continue;
        if (!value.is_string()) {
          throw ManifestError("\"pred_text\" must be a string", line_no);
        }
        rec.pred_text = value.get<std::string>();
      } else if (key == "duration") {
        if (value.is_null()) continue;
        if (!value.is_number()) {
          throw ManifestError("\"duration\" must be a number", line_no);
        }
        double d = value.get<double>();
        if (d < 0) throw ManifestError("negative duration", line_no);
        rec.duration = d;
      } else {
        rec.extra.emplace_back(key, value.dump());
      }
    }
    if (!obj.contains("text")) {
      throw ManifestError("missing \"text\"", line_no);
    }
    if (!obj.contains("id")) rec.id = std::to_string(line_no);
    if (!ids.insert(rec.id).second) {
      throw ManifestError("duplicate id \"" + rec.id + "\"", line_no);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SampleRecord> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest " + path.string());
  return parse_manifest(in);
}

std::string to_json_line(const SampleRecord& record) {
  json obj = json::object();
  obj["id"] = record.id;
  obj["text"] = record.text;
  if (record.pred_text) obj["pred_text"] = *record.pred_text;
  if (record.duration) obj["duration"] = *record.duration;
  for (const auto& [k, v] : record.extra) obj[k] = json::parse(v);
  return obj.dump();
}

void write_manifest(std::ostream& out, std::span<const SampleRecord> records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

}  // namespace pcscore
