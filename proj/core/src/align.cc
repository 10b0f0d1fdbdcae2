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

#include "pcscore/align.h"

namespace pcscore {

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kCorrect:
      return "C";
    case EditKind::kSubstitution:
      return "S";
    case EditKind::kDeletion:
      return "D";
    case EditKind::kInsertion:
      return "I";
  }
  return "?";
}

std::size_t AlignmentPath::errors() const {
  std::size_t n = 0;
  for (const auto& op : ops) n += op.kind != EditKind::kCorrect;
  return n;
}

double AlignmentCounts::rate() const {
  if (auto r = try_rate()) return *r;
  throw UndefinedRateError(*this);
}

std::optional<double> AlignmentCounts::try_rate() const {
  if (ref_length == 0) {
    if (errors() == 0) return 0.0;
    return std::nullopt;
  }
  return static_cast<double>(errors()) / static_cast<double>(ref_length);
}

AlignmentCounts& AlignmentCounts::operator+=(const AlignmentCounts& other) {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  correct += other.correct;
  ref_length += other.ref_length;
  return *this;
}

UndefinedRateError::UndefinedRateError(const AlignmentCounts& counts)
    : Error("error rate undefined: empty reference with " +
            std::to_string(counts.insertions) + " inserted token(s)"),
      counts_(counts) {}

AlignmentPath levenshtein_align(std::span<const Token> ref,
                                std::span<const Token> hyp) {
  return detail::align_indices(ref.size(), hyp.size(),
                               [&](std::size_t i, std::size_t j) {
                                 return ref[i].surface == hyp[j].surface;
                               });
}

AlignmentCounts count_edits(const AlignmentPath& path, std::size_t ref_len) {
  AlignmentCounts counts;
  std::size_t next_ref = 0;
  std::size_t next_hyp = 0;
  for (const auto& op : path.ops) {
    bool wants_ref = op.kind != EditKind::kInsertion;
    bool wants_hyp = op.kind != EditKind::kDeletion;
    if (wants_ref != op.ref_index.has_value() ||
        wants_hyp != op.hyp_index.has_value()) {
      throw StructuralError("edit op carries the wrong indices for its kind");
    }
    if (wants_ref && *op.ref_index != next_ref++) {
      throw StructuralError("reference indices are not contiguous");
    }
    if (wants_hyp && *op.hyp_index != next_hyp++) {
      throw StructuralError("hypothesis indices are not contiguous");
    }
    switch (op.kind) {
      case EditKind::kCorrect:
        ++counts.correct;
        break;
      case EditKind::kSubstitution:
        ++counts.substitutions;
        break;
      case EditKind::kDeletion:
        ++counts.deletions;
        break;
      case EditKind::kInsertion:
        ++counts.insertions;
        break;
    }
  }
  if (next_ref != ref_len) {
    throw StructuralError("path covers " + std::to_string(next_ref) +
                          " reference tokens, expected " +
                          std::to_string(ref_len));
  }
  counts.ref_length = ref_len;
  return counts;
}

AlignmentCounts view_counts(std::span<const Token> ref,
                            std::span<const Token> hyp, TextView view) {
  std::vector<Token> r = project_tokens(ref, view);
  std::vector<Token> h = project_tokens(hyp, view);
  return count_edits(levenshtein_align(r, h), r.size());
}

double word_error_rate(std::string_view ref_text, std::string_view hyp_text,
                       TextView view, const PunctSet& puncts) {
  return view_counts(tokenize(ref_text, puncts), tokenize(hyp_text, puncts),
                     view)
      .rate();
}

}  // namespace pcscore
