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

#ifndef PCSCORE_RESTORE_H_
#define PCSCORE_RESTORE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pcscore/manifest.h"
#include "pcscore/textnorm.h"

namespace pcscore {

// A source document indexed by its plain-view words. Each word maps back to
// the bytes it came from so that the original casing and punctuation can be
// cut out for a matched range.
class SourceText {
 public:
  struct Span {
    std::size_t core_begin;  // first byte of the word
    std::size_t core_end;    // one past the last byte of the word
    std::size_t chunk_end;   // end of the word's trailing punctuation
  };

  // The text is NFC-normalized; all offsets refer to the normalized copy.
  explicit SourceText(std::string_view text, std::size_t anchor_order = 3);

  const std::string& text() const { return text_; }
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<std::string>& folded() const { return folded_; }
  const std::vector<Span>& spans() const { return spans_; }
  std::size_t anchor_order() const { return anchor_order_; }

  // Original characters for words [begin, end): from the first byte of the
  // first word to the end of the punctuation attached to the last word.
  std::string extract(std::size_t begin, std::size_t end) const;

  // Start positions of an n-gram of folded words; n must be 1 or
  // anchor_order().
  std::span<const std::uint32_t> occurrences(
      std::span<const std::string> folded_ngram) const;

 private:
  std::string text_;
  std::vector<std::string> tokens_;
  std::vector<std::string> folded_;
  std::vector<Span> spans_;
  std::size_t anchor_order_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> unigrams_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> ngrams_;
};

enum class DropReason {
  kUnicodeMismatch,
  kDeviationExceeded,
  kTooShort,
  kAllUppercase,
};

std::string_view to_string(DropReason reason);

struct RestoreConfig {
  std::size_t max_deviation = 2;  // words
  double min_duration = 1.0;      // seconds
  PunctSet puncts;                // used to read transcripts
  // Rules are checked in this order; the first that fires is the reason.
  std::vector<DropReason> rule_order{
      DropReason::kUnicodeMismatch, DropReason::kDeviationExceeded,
      DropReason::kTooShort, DropReason::kAllUppercase};
};

struct LocateResult {
  bool found = false;  // a window within max_deviation exists
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t deviation = 0;         // exact word edits over [begin, end)
  std::size_t folded_deviation = 0;  // edits after diacritic folding
};

// Finds the source window with the fewest word edits to the transcript.
// Rare anchor n-grams pick candidate windows for a local fitting alignment;
// if none of them is within budget the whole document is searched, so
// `found` is exact. When not found, the fields describe the best candidate.
LocateResult locate(std::string_view transcript, const SourceText& source,
                    const RestoreConfig& config);

struct RestoreDecision {
  std::optional<DropReason> reason;  // nullopt when kept
  std::optional<std::string> restored_text;
  std::size_t deviation = 0;
  bool duration_checked = false;

  bool kept() const { return !reason.has_value(); }
};

RestoreDecision restore_sample(std::string_view transcript,
                               const SourceText& source,
                               std::optional<double> duration,
                               const RestoreConfig& config);

struct RetentionItem {
  std::string group;
  std::optional<double> duration;
  bool kept = false;
};

struct RetentionRow {
  std::string group;
  std::size_t original_samples = 0;
  std::size_t kept_samples = 0;
  double original_seconds = 0;
  double kept_seconds = 0;

  double original_hours() const { return original_seconds / 3600.0; }
  double kept_hours() const { return kept_seconds / 3600.0; }
  double retention() const {
    return original_seconds > 0 ? kept_seconds / original_seconds : 1.0;
  }
};

// One row per group in order of first appearance. Throws PreconditionError
// if a duration is missing.
std::vector<RetentionRow> retention_report(std::span<const RetentionItem> items);

std::string retention_to_table(std::span<const RetentionRow> rows);

struct RestoredSample {
  std::string id;
  RestoreDecision decision;
};

struct RestoreOutcome {
  std::vector<SampleRecord> kept;  // text replaced by the restored text
  std::vector<RestoredSample> decisions;
  // Empty when some sample has no duration.
  std::vector<RetentionRow> retention;
};

// Restores every sample of a transcript manifest. The source document is
// named by the sample's "source" field, or is the only document given.
// Retention rows are grouped by the "subset" field ("all" if absent).
// Throws ManifestError for a sample whose source cannot be resolved.
RestoreOutcome restore_manifest(std::span<const SampleRecord> samples,
                                const std::map<std::string, SourceText>& sources,
                                const RestoreConfig& config);

std::string decisions_to_tsv(std::span<const RestoredSample> decisions);

}  // namespace pcscore

#endif  // PCSCORE_RESTORE_H_
