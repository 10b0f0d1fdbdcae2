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

#include "pcscore/corpus.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fixtures.h"
#include "pcscore/errors.h"
#include "pcscore/report_io.h"

namespace pcscore {
namespace {

SampleRecord sample(std::string id, std::string ref, std::string hyp) {
  SampleRecord s;
  s.id = std::move(id);
  s.text = std::move(ref);
  s.pred_text = std::move(hyp);
  return s;
}

TEST(Evaluate, PerfectManifest) {
  std::vector<SampleRecord> samples = {sample("a", "Hi, Bob.", "Hi, Bob."),
                                       sample("b", "Is it?", "Is it?")};
  auto r = evaluate_corpus(samples, EvalConfig{});
  EXPECT_EQ(r.wer(), 0.0);
  EXPECT_EQ(r.wer_c(), 0.0);
  EXPECT_EQ(r.wer_pc(), 0.0);
  EXPECT_EQ(r.per_rate().value, 0.0);
  EXPECT_EQ(r.n_samples, 2u);
}

TEST(Evaluate, DroppedFinalMark) {
  std::vector<SampleRecord> samples = {sample("1", "I was done.", "I was done")};
  auto r = evaluate_corpus(samples, EvalConfig{});
  EXPECT_EQ(r.wer_pc(), 0.25);
  EXPECT_EQ(r.per_rate().value, 1.0);
  EXPECT_EQ(r.wer(), 0.0);
}

TEST(Evaluate, DuplicationKeepsRates) {
  EvalConfig config;
  config.puncts = PunctSet({",", "!"});
  std::vector<SampleRecord> one = {sample("a", "Let's eat, Bob!", "Let's eat Bob!")};
  std::vector<SampleRecord> two = {one[0], one[0]};
  two[1].id = "b";
  auto r1 = evaluate_corpus(one, config);
  auto r2 = evaluate_corpus(two, config);
  EXPECT_EQ(r1.wer_pc(), 0.2);
  EXPECT_EQ(r1.per_rate().value, 0.5);
  EXPECT_EQ(r2.wer_pc(), r1.wer_pc());
  EXPECT_EQ(r2.per_rate().value, r1.per_rate().value);
  EXPECT_EQ(r2.per.deletions, 2u);
}

TEST(Evaluate, SkipsMissingHypothesis) {
  std::vector<SampleRecord> samples = {sample("b", "x", "x"), sample("a", "y", "y")};
  samples[1].pred_text.reset();
  samples.push_back(sample("c", "z", "z"));
  samples[2].pred_text.reset();
  auto r = evaluate_corpus(samples, EvalConfig{});
  EXPECT_EQ(r.n_samples, 1u);
  EXPECT_EQ(r.skipped, (std::vector<std::string>{"a", "c"}));
}

TEST(Evaluate, NoNormalizeKeepsAttachedMarks) {
  EvalConfig config;
  config.normalize = false;
  std::vector<SampleRecord> samples = {sample("a", "done.", "done")};
  auto r = evaluate_corpus(samples, config);
  EXPECT_EQ(r.per.ref_marks, 0u);
  EXPECT_EQ(r.wer(), 1.0);
}

TEST(Evaluate, ViewTokenCounts) {
  auto samples = testing::random_manifest(300, 5);
  EvalConfig config;
  config.details = true;
  auto r = evaluate_corpus(samples, config);
  for (const auto& d : r.details) {
    ASSERT_EQ(d.plain.ref_length, d.cased.ref_length);
    ASSERT_LE(d.cased.ref_length, d.full.ref_length);
    ASSERT_EQ(d.full.ref_length, d.cased.ref_length + d.per.ref_marks);
    ASSERT_LE(d.plain.errors(), d.cased.errors());
  }
  EXPECT_TRUE(std::is_sorted(r.details.begin(), r.details.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST(Evaluate, WorkersDoNotChangeOutput) {
  auto samples = testing::random_manifest(250, 9);
  EvalConfig config;
  config.f1 = true;
  config.macro_per = true;
  config.details = true;
  std::string single = report_to_json(evaluate_corpus(samples, config));
  for (unsigned w : {2u, 3u, 8u}) {
    config.workers = w;
    EXPECT_EQ(report_to_json(evaluate_corpus(samples, config)), single);
  }
}

TEST(Merge, IdentityAndCommutativity) {
  auto samples = testing::random_manifest(120, 21);
  EvalConfig config;
  config.f1 = true;
  config.details = true;
  std::span<const SampleRecord> all(samples);
  auto a = evaluate_corpus(all.subspan(0, 50), config);
  auto b = evaluate_corpus(all.subspan(50), config);
  auto empty = empty_report(config);
  EXPECT_EQ(report_to_json(merge_reports(a, empty)), report_to_json(a));
  EXPECT_EQ(report_to_json(merge_reports(empty, a)), report_to_json(a));
  EXPECT_EQ(report_to_json(merge_reports(a, b)), report_to_json(merge_reports(b, a)));
  EXPECT_EQ(report_to_json(merge_reports(a, b)), report_to_json(evaluate_corpus(samples, config)));
}

TEST(Merge, FourShards) {
  auto samples = testing::random_manifest(200, 33);
  for (auto& s : samples) {
    if (std::stoi(s.id.substr(4)) % 17 == 0) s.pred_text.reset();
  }
  EvalConfig config;
  config.macro_per = true;
  config.f1 = true;
  std::span<const SampleRecord> all(samples);
  CorpusReport merged = empty_report(config);
  for (std::size_t k = 0; k < 4; ++k) {
    merged = merge_reports(merged, evaluate_corpus(all.subspan(k * 50, 50), config));
  }
  EXPECT_EQ(report_to_json(merged), report_to_json(evaluate_corpus(samples, config)));
}

TEST(Merge, RejectsDifferentSettings) {
  EvalConfig a;
  EvalConfig b;
  b.puncts = PunctSet({".", ","});
  EXPECT_THROW(merge_reports(empty_report(a), empty_report(b)), MismatchError);
  b = a;
  b.workers = 4;
  EXPECT_NO_THROW(merge_reports(empty_report(a), empty_report(b)));
}

TEST(ReportJson, RoundTripIsByteIdentical) {
  auto samples = testing::random_manifest(80, 44);
  samples[3].pred_text.reset();
  for (bool rich : {false, true}) {
    EvalConfig config;
    config.f1 = rich;
    config.macro_per = rich;
    config.details = rich;
    config.puncts = rich ? PunctSet({".", ",", "?", "!"}) : PunctSet();
    std::string once = report_to_json(evaluate_corpus(samples, config));
    std::string twice = report_to_json(report_from_json(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(ReportJson, CarriesCountsAndRates) {
  std::vector<SampleRecord> samples = {sample("1", "I was done.", "I was done")};
  std::string json = report_to_json(evaluate_corpus(samples, EvalConfig{}));
  EXPECT_NE(json.find("\"wer_pc\":0.25"), std::string::npos) << json;
  EXPECT_NE(json.find("\"per\":1.0"), std::string::npos) << json;
  EXPECT_NE(json.find("\"deletions\":1"), std::string::npos) << json;
  EXPECT_EQ(json.find('\n'), std::string::npos);
  EXPECT_THROW(report_from_json("{}"), std::exception);
}

TEST(ReportTable, BreakdownRows) {
  std::vector<SampleRecord> samples = {sample("1", "a. b, c?", "a, b, c")};
  auto r = evaluate_corpus(samples, EvalConfig{});
  std::string table = breakdown_to_table(r.breakdown());
  for (const char* row : {"Correct", "Deletions", "Insertions", "Substitutions (total)",
                          "Substitutions (to ','", "PER"}) {
    EXPECT_NE(table.find(row), std::string::npos) << row << "\n" << table;
  }
  EXPECT_NE(table.find("100.00%"), std::string::npos) << table;
}

TEST(Render, Alignment) {
  PunctSet puncts;
  auto ref = tokenize("I was done .", puncts);
  auto hyp = tokenize("I is done", puncts);
  std::string out = render_alignment(ref, hyp, levenshtein_align(ref, hyp));
  EXPECT_EQ(out,
            "REF: I was done .\n"
            "HYP: I is  done ***\n"
            "     C S   C    D\n");
}

TEST(Render, DumpMarksSubstitutions) {
  EvalConfig config;
  std::string dump = alignment_dump(sample("x", "Yes.", "Yes?"), config);
  EXPECT_NE(dump.find("[punct C=0 S=1 D=0 I=0]"), std::string::npos) << dump;
}

}  // namespace
}  // namespace pcscore
