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

#ifndef PCSCORE_CORPUS_H_
#define PCSCORE_CORPUS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcscore/align.h"
#include "pcscore/f1.h"
#include "pcscore/manifest.h"
#include "pcscore/per.h"
#include "pcscore/textnorm.h"

namespace pcscore {

struct EvalConfig {
  PunctSet puncts;
  bool normalize = true;
  bool f1 = false;         // zero-WER slot F1 section
  bool macro_per = false;  // also report the mean of per-sample PER
  bool details = false;    // per-sample rows
  unsigned workers = 1;    // never affects results

  TextOptions text_options() const { return TextOptions{puncts, normalize}; }
  // Everything except `workers`.
  std::string fingerprint() const;
};

struct SampleDetail {
  std::string id;
  AlignmentCounts plain;
  AlignmentCounts cased;
  AlignmentCounts full;
  PerCounts per;

  bool operator==(const SampleDetail&) const = default;
};

struct F1Section {
  std::uint64_t evaluated = 0;  // samples with a hypothesis
  std::uint64_t zero_wer = 0;
  F1Counts counts;

  bool operator==(const F1Section&) const = default;
};

// Pooled integer counts for a set of samples. Every rate is derived from the
// counts, so reports merge exactly.
struct CorpusReport {
  EvalConfig config;
  std::uint64_t n_samples = 0;
  std::vector<std::string> skipped;  // ids without pred_text, sorted
  AlignmentCounts plain;             // WER
  AlignmentCounts cased;             // WER C
  AlignmentCounts full;              // WER PC
  PerCounts per;
  std::uint64_t macro_per_samples = 0;  // samples with any punctuation
  // Per-sample PER numerators summed by denominator; exact under merging.
  std::map<std::uint64_t, std::uint64_t> macro_per_terms;
  std::optional<F1Section> f1;
  std::vector<SampleDetail> details;  // sorted by id

  std::optional<double> wer() const { return plain.try_rate(); }
  std::optional<double> wer_c() const { return cased.try_rate(); }
  std::optional<double> wer_pc() const { return full.try_rate(); }
  PerRate per_rate() const { return punctuation_error_rate(per); }
  std::optional<double> macro_per_rate() const;
  Breakdown breakdown() const { return per_breakdown(per, config.puncts.marks()); }
};

// Scores one prepared pair in all three views plus PER.
SampleDetail score_sample(const SampleRecord& sample, const TextOptions& text);

CorpusReport empty_report(const EvalConfig& config);

// Samples without pred_text are listed in `skipped` and excluded.
CorpusReport evaluate_corpus(std::span<const SampleRecord> samples,
                             const EvalConfig& config);

// Throws MismatchError if the configurations differ.
CorpusReport merge_reports(const CorpusReport& a, const CorpusReport& b);

// Side-by-side rendering of one alignment, one column per op.
std::string render_alignment(std::span<const Token> ref,
                             std::span<const Token> hyp,
                             const AlignmentPath& path);

// Full-view and masked-punctuation alignments of one sample.
std::string alignment_dump(const SampleRecord& sample, const EvalConfig& config);

}  // namespace pcscore

#endif  // PCSCORE_CORPUS_H_
