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

#ifndef PCSCORE_F1_H_
#define PCSCORE_F1_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcscore/manifest.h"
#include "pcscore/textnorm.h"

namespace pcscore {

// Slot-wise precision/recall/F1 for samples whose plain-view transcripts are
// identical. Only on such samples do word positions correspond one to one.

struct PrfScores {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  bool precision_defined() const { return tp + fp > 0; }
  bool recall_defined() const { return tp + fn > 0; }
  // Undefined ratios are reported as 0; check the *_defined() flags.
  double precision() const;
  double recall() const;
  double f1() const;

  PrfScores& operator+=(const PrfScores& other);
  bool operator==(const PrfScores&) const = default;
};

// Per-word labels. Marks before the first word go to `leading`; marks after
// word k go to punct_after[k] in order of appearance.
struct SlotLabels {
  std::vector<std::string> words;  // lowercased surfaces
  std::vector<bool> capitalized;
  std::vector<std::string> leading;
  std::vector<std::vector<std::string>> punct_after;
};

SlotLabels slot_labels(std::span<const Token> tokens);

struct F1Counts {
  PrfScores capitalization;
  PrfScores punctuation;  // micro over all marks
  std::map<std::string, PrfScores> punctuation_by_mark;

  // Mean F1 over marks that occur on either side; 0 if none.
  double punctuation_macro_f1() const;

  F1Counts& operator+=(const F1Counts& other);
  bool operator==(const F1Counts&) const = default;
};

// Compares labels slot by slot. A differing mark in the same slot counts as
// one false positive plus one false negative. Throws PreconditionError if
// the plain views differ.
F1Counts score_slots(std::span<const Token> ref, std::span<const Token> hyp);

bool plain_views_equal(std::span<const Token> ref, std::span<const Token> hyp);

struct SubsetSelection {
  std::vector<std::size_t> indices;  // ascending
  std::size_t total = 0;             // size of the manifest drawn from

  std::size_t size() const { return indices.size(); }
  double fraction() const {
    return total ? static_cast<double>(indices.size()) / total : 0.0;
  }
};

// Samples with a hypothesis whose plain-view WER is zero.
SubsetSelection zero_wer_subset(std::span<const SampleRecord> samples,
                                const TextOptions& options);

// Throws MismatchError if the subsets come from manifests of different size
// and std::invalid_argument for an empty list.
SubsetSelection intersection(std::span<const SubsetSelection> subsets);

std::vector<SampleRecord> select(std::span<const SampleRecord> samples,
                                 const SubsetSelection& subset);

// Pooled scores over a subset. Throw UndefinedScoreError for an empty subset
// and PreconditionError for a sample with nonzero plain-view WER.
F1Counts f1_scores(std::span<const SampleRecord> subset,
                   const TextOptions& options);
PrfScores cap_scores(std::span<const SampleRecord> subset,
                     const TextOptions& options);
PrfScores punct_scores(std::span<const SampleRecord> subset,
                       const TextOptions& options);

}  // namespace pcscore

#endif  // PCSCORE_F1_H_
