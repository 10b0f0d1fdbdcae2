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

#include "pcscore/f1.h"

#include <algorithm>
#include <stdexcept>

#include "pcscore/errors.h"

namespace pcscore {
namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

void compare_marks(const std::vector<std::string>& ref,
                   const std::vector<std::string>& hyp, F1Counts& out) {
  std::size_t n = std::max(ref.size(), hyp.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::string* r = k < ref.size() ? &ref[k] : nullptr;
    const std::string* h = k < hyp.size() ? &hyp[k] : nullptr;
    if (r && h && *r == *h) {
      ++out.punctuation.tp;
      ++out.punctuation_by_mark[*r].tp;
      continue;
    }
    if (h) {
      ++out.punctuation.fp;
      ++out.punctuation_by_mark[*h].fp;
    }
    if (r) {
      ++out.punctuation.fn;
      ++out.punctuation_by_mark[*r].fn;
    }
  }
}

}  // namespace

double PrfScores::precision() const { return ratio(tp, tp + fp); }
double PrfScores::recall() const { return ratio(tp, tp + fn); }

double PrfScores::f1() const {
  double p = precision();
  double r = recall();
  return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
}

PrfScores& PrfScores::operator+=(const PrfScores& other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  return *this;
}

double F1Counts::punctuation_macro_f1() const {
  double total = 0;
  std::size_t n = 0;
  for (const auto& [_, s] : punctuation_by_mark) {
    if (s.tp + s.fp + s.fn == 0) continue;
    total += s.f1();
    ++n;
  }
  return n ? total / static_cast<double>(n) : 0.0;
}

F1Counts& F1Counts::operator+=(const F1Counts& other) {
  capitalization += other.capitalization;
  punctuation += other.punctuation;
  for (const auto& [m, s] : other.punctuation_by_mark) {
    punctuation_by_mark[m] += s;
  }
  return *this;
}

SlotLabels slot_labels(std::span<const Token> tokens) {
  SlotLabels labels;
  for (const auto& t : tokens) {
    if (t.is_punct()) {
      if (labels.words.empty()) {
        labels.leading.push_back(t.surface);
      } else {
        labels.punct_after.back().push_back(t.surface);
      }
      continue;
    }
    labels.words.push_back(to_lower(t.surface));
    labels.capitalized.push_back(is_capitalized(t.surface));
    labels.punct_after.emplace_back();
  }
  return labels;
}

bool plain_views_equal(std::span<const Token> ref, std::span<const Token> hyp) {
  return project_tokens(ref, TextView::kPlain) ==
         project_tokens(hyp, TextView::kPlain);
}

F1Counts score_slots(std::span<const Token> ref, std::span<const Token> hyp) {
  SlotLabels r = slot_labels(ref);
  SlotLabels h = slot_labels(hyp);
  if (r.words != h.words) {
    throw PreconditionError("slot scoring needs identical plain-view text");
  }
  F1Counts out;
  for (std::size_t k = 0; k < r.words.size(); ++k) {
    bool rc = r.capitalized[k];
    bool hc = h.capitalized[k];
    if (rc && hc) ++out.capitalization.tp;
    if (!rc && hc) ++out.capitalization.fp;
    if (rc && !hc) ++out.capitalization.fn;
  }
  compare_marks(r.leading, h.leading, out);
  for (std::size_t k = 0; k < r.words.size(); ++k) {
    compare_marks(r.punct_after[k], h.punct_after[k], out);
  }
  return out;
}

SubsetSelection zero_wer_subset(std::span<const SampleRecord> samples,
                                const TextOptions& options) {
  SubsetSelection out;
  out.total = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SampleRecord& s = samples[i];
    if (!s.pred_text) continue;
    if (plain_views_equal(options.prepare_tokens(s.text),
                          options.prepare_tokens(*s.pred_text))) {
      out.indices.push_back(i);
    }
  }
  return out;
}

SubsetSelection intersection(std::span<const SubsetSelection> subsets) {
  if (subsets.empty()) {
    throw std::invalid_argument("intersection of an empty list of subsets");
  }
  SubsetSelection out = subsets.front();
  for (const auto& s : subsets.subspan(1)) {
    if (s.total != out.total) {
      throw MismatchError("subsets drawn from manifests of different sizes (" +
                          std::to_string(out.total) + " vs " +
                          std::to_string(s.total) + ")");
    }
    std::vector<std::size_t> both;
    std::set_intersection(out.indices.begin(), out.indices.end(),
                          s.indices.begin(), s.indices.end(),
                          std::back_inserter(both));
    out.indices = std::move(both);
  }
  return out;
}

std::vector<SampleRecord> select(std::span<const SampleRecord> samples,
                                 const SubsetSelection& subset) {
  std::vector<SampleRecord> out;
  out.reserve(subset.size());
  for (std::size_t i : subset.indices) out.push_back(samples[i]);
  return out;
}

F1Counts f1_scores(std::span<const SampleRecord> subset,
                   const TextOptions& options) {
  if (subset.empty()) {
    throw UndefinedScoreError("F1 scores over an empty subset");
  }
  F1Counts total;
  for (const auto& s : subset) {
    if (!s.pred_text) {
      throw PreconditionError("sample \"" + s.id + "\" has no hypothesis");
    }
    try {
      total += score_slots(options.prepare_tokens(s.text),
                           options.prepare_tokens(*s.pred_text));
    } catch (const PreconditionError&) {
      throw PreconditionError("sample \"" + s.id +
                              "\" has nonzero plain-view WER");
    }
  }
  return total;
}

PrfScores cap_scores(std::span<const SampleRecord> subset,
                     const TextOptions& options) {
  return f1_scores(subset, options).capitalization;
}

PrfScores punct_scores(std::span<const SampleRecord> subset,
                       const TextOptions& options) {
  return f1_scores(subset, options).punctuation;
}

}  // namespace pcscore
