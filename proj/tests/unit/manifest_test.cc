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

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "pcscore/errors.h"

namespace pcscore {
namespace {

std::vector<SampleRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_manifest(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ManifestError& e) {
    return e.line();
  }
  return 0;
}

TEST(Manifest, TwoLines) {
  auto records = parse(
      R"({"id": "a", "text": "Hi.", "pred_text": "hi", "duration": 1.5})"
      "\n"
      R"({"id": "b", "text": "Yes?", "speaker": 7})"
      "\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].id, "a");
  EXPECT_EQ(records[0].pred_text, "hi");
  EXPECT_EQ(records[0].duration, 1.5);
  EXPECT_EQ(records[0].line, 1u);
  EXPECT_FALSE(records[1].has_hypothesis());
  ASSERT_EQ(records[1].extra.size(), 1u);
  EXPECT_EQ(records[1].extra[0].first, "speaker");
  EXPECT_EQ(records[1].extra[0].second, "7");
}

TEST(Manifest, CrlfAndBlankLines) {
  auto records = parse("{\"id\":\"a\",\"text\":\"x\"}\r\n\r\n  \n{\"id\":\"b\",\"text\":\"y\"}\r\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].line, 4u);
}

TEST(Manifest, TrailingCommaNamesLine) {
  EXPECT_EQ(error_line("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"b\",\"text\":\"y\",}\n"), 2u);
}

TEST(Manifest, StructuralErrors) {
  EXPECT_EQ(error_line("{\"id\":\"a\"}\n"), 1u);
  EXPECT_EQ(error_line("{\"id\":\"a\",\"text\":3}\n"), 1u);
  EXPECT_EQ(error_line("[1,2]\n"), 1u);
  EXPECT_EQ(error_line("{\"text\":\"x\",\"duration\":-1}\n"), 1u);
  EXPECT_EQ(error_line("{\"id\":\"a\",\"text\":\"x\"}\n\n{\"id\":\"a\",\"text\":\"y\"}\n"), 3u);
  EXPECT_EQ(error_line("{\"id\":\"a\",\"text\":\"x\",\"pred_text\":5}\n"), 1u);
}

TEST(Manifest, MissingIdUsesLineNumber) {
  auto records = parse("\n{\"text\":\"x\"}\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].id, "2");
}

TEST(Manifest, NullHypothesisIsMissing) {
  auto records = parse("{\"id\":\"a\",\"text\":\"x\",\"pred_text\":null}\n");
  EXPECT_FALSE(records[0].has_hypothesis());
}

TEST(Manifest, RoundTrip) {
  auto records = parse(
      R"({"id":"a","text":"Hé, there.","pred_text":"he there","duration":2.25,"source":"book","subset":"dev"})"
      "\n");
  std::ostringstream out;
  write_manifest(out, records);
  auto again = parse(out.str());
  ASSERT_EQ(again.size(), 1u);
  EXPECT_EQ(again[0].text, records[0].text);
  EXPECT_EQ(again[0].pred_text, records[0].pred_text);
  EXPECT_EQ(again[0].duration, records[0].duration);
  EXPECT_EQ(again[0].extra_string("source"), "book");
  EXPECT_EQ(again[0].extra_string("subset"), "dev");
  EXPECT_FALSE(again[0].extra_string("missing").has_value());
  EXPECT_EQ(to_json_line(again[0]), to_json_line(records[0]));
}

TEST(Manifest, MissingFile) {
  EXPECT_THROW(load_manifest("/nonexistent/manifest.jsonl"), ManifestError);
}

}  // namespace
}  // namespace pcscore
