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

#ifndef PCSCORE_PER_H_
#define PCSCORE_PER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcscore/align.h"
#include "pcscore/textnorm.h"

namespace pcscore {

// Literal label written by mask_punct(). Scoring itself compares token
// classes and never looks at this string.
inline constexpr std::string_view kMaskLabel = "[PUNCT]";

struct MaskedTokens {
  std::vector<Token> tokens;
  // Original mark for each masked position, nullopt for words.
  std::vector<std::optional<std::string>> marks;
};

// Replaces every punctuation token with kMaskLabel. Throws
// InputCollisionError if a word already spells kMaskLabel.
MaskedTokens mask_punct(std::span<const Token> tokens);

// Punctuation-restricted tallies. The scalar counts satisfy
//   deletions  == ref_marks - (substitutions + correct)
//   insertions == hyp_marks - (substitutions + correct)
// and each per-mark map sums to its scalar. Substitutions are keyed
// reference mark -> hypothesis mark and never have equal keys.
struct PerCounts {
  std::uint64_t correct = 0;
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t ref_marks = 0;
  std::uint64_t hyp_marks = 0;
  std::map<std::string, std::map<std::string, std::uint64_t>>
      substitution_matrix;
  std::map<std::string, std::uint64_t> deletions_by_mark;
  std::map<std::string, std::uint64_t> insertions_by_mark;
  std::map<std::string, std::uint64_t> correct_by_mark;

  std::uint64_t errors() const {
    return substitutions + deletions + insertions;
  }
  // Throws StructuralError if any of the identities above fails.
  void verify() const;

  PerCounts& operator+=(const PerCounts& other);
  bool operator==(const PerCounts&) const = default;
};

// Aligns the masked sequences, checks the marks at every aligned
// punctuation/punctuation position and closes the books for deletions and
// insertions. A mark aligned against a word is a deletion (reference side)
// or insertion (hypothesis side), never a substitution.
PerCounts per_align(std::span<const Token> ref, std::span<const Token> hyp);

// Same, also returning the masked alignment path.
PerCounts per_align(std::span<const Token> ref, std::span<const Token> hyp,
                    AlignmentPath* path);

struct PerRate {
  double value = 0.0;
  // No punctuation on either side; value is reported as 0.
  bool punctuation_free = false;
};

// (I + D + S) / (I + D + S + C).
PerRate punctuation_error_rate(const PerCounts& counts);

// One mark's column of the per-mark table. Deletions and substitutions are
// attributed to the reference mark, insertions to the hypothesis mark.
struct BreakdownColumn {
  std::string mark;
  std::uint64_t correct = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t substitutions = 0;
  std::map<std::string, std::uint64_t> substitutions_to;

  std::uint64_t total() const {
    return correct + deletions + insertions + substitutions;
  }
  double fraction(std::uint64_t count) const {
    return static_cast<double>(count) / static_cast<double>(total());
  }
  double per() const { return fraction(deletions + insertions + substitutions); }
};

struct Breakdown {
  std::vector<BreakdownColumn> columns;
  // Requested marks that never occurred.
  std::vector<std::string> unseen;
};

// Columns follow `marks` order, then any other mark present in the counts
// in lexicographic order. Every column lists a substitution target for each
// other column mark.
Breakdown per_breakdown(const PerCounts& counts,
                        std::span<const std::string> marks = {});

}  // namespace pcscore

#endif  // PCSCORE_PER_H_
