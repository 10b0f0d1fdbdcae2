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

#ifndef PCSCORE_ALIGN_H_
#define PCSCORE_ALIGN_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcscore/errors.h"
#include "pcscore/textnorm.h"

namespace pcscore {

enum class EditKind { kCorrect, kSubstitution, kDeletion, kInsertion };

std::string_view to_string(EditKind kind);

// Correct and Substitution carry both indices, Deletion only the reference
// index, Insertion only the hypothesis index.
struct EditOp {
  EditKind kind;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  static EditOp correct(std::size_t r, std::size_t h) {
    return {EditKind::kCorrect, r, h};
  }
  static EditOp substitution(std::size_t r, std::size_t h) {
    return {EditKind::kSubstitution, r, h};
  }
  static EditOp deletion(std::size_t r) {
    return {EditKind::kDeletion, r, std::nullopt};
  }
  static EditOp insertion(std::size_t h) {
    return {EditKind::kInsertion, std::nullopt, h};
  }

  bool operator==(const EditOp&) const = default;
};

struct AlignmentPath {
  std::vector<EditOp> ops;

  std::size_t errors() const;
  bool operator==(const AlignmentPath&) const = default;
};

struct AlignmentCounts {
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t correct = 0;
  std::uint64_t ref_length = 0;

  std::uint64_t errors() const { return substitutions + deletions + insertions; }
  // (S + D + I) / N_ref. Throws UndefinedRateError when the reference is
  // empty and the hypothesis is not.
  double rate() const;
  std::optional<double> try_rate() const;

  AlignmentCounts& operator+=(const AlignmentCounts& other);
  bool operator==(const AlignmentCounts&) const = default;
};

// Error rate with an empty reference and a non-empty hypothesis.
class UndefinedRateError : public Error {
 public:
  explicit UndefinedRateError(const AlignmentCounts& counts);
  const AlignmentCounts& counts() const { return counts_; }

 private:
  AlignmentCounts counts_;
};

namespace detail {

// Unit-cost Levenshtein with backtrace. `equal(i, j)` compares ref[i] with
// hyp[j]. On equal cost the backtrace (run from the end) prefers the
// diagonal, then deletion, then insertion.
template <typename Equal>
AlignmentPath align_indices(std::size_t n, std::size_t m, Equal&& equal) {
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  std::vector<std::uint8_t> same(n * m);
  for (std::size_t j = 0; j <= m; ++j) cost[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint32_t* row = &cost[i * width];
    const std::uint32_t* up = &cost[(i - 1) * width];
    row[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      bool eq = equal(i - 1, j - 1);
      same[(i - 1) * m + (j - 1)] = eq;
      std::uint32_t best = up[j - 1] + (eq ? 0 : 1);
      best = std::min(best, up[j] + 1);
      best = std::min(best, row[j - 1] + 1);
      row[j] = best;
    }
  }

  AlignmentPath path;
  path.ops.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    std::uint32_t here = cost[i * width + j];
    if (i > 0 && j > 0) {
      bool eq = same[(i - 1) * m + (j - 1)];
      if (cost[(i - 1) * width + (j - 1)] + (eq ? 0 : 1) == here) {
        path.ops.push_back(eq ? EditOp::correct(i - 1, j - 1)
                              : EditOp::substitution(i - 1, j - 1));
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && cost[(i - 1) * width + j] + 1 == here) {
      path.ops.push_back(EditOp::deletion(i - 1));
      --i;
    } else {
      path.ops.push_back(EditOp::insertion(j - 1));
      --j;
    }
  }
  std::reverse(path.ops.begin(), path.ops.end());
  return path;
}

}  // namespace detail

// Minimum-cost monotone alignment under unit costs with an arbitrary
// equality predicate over positions.
template <typename Equal>
AlignmentPath levenshtein_align(std::size_t ref_len, std::size_t hyp_len,
                                Equal&& equal) {
  return detail::align_indices(ref_len, hyp_len, std::forward<Equal>(equal));
}

// Token alignment with exact surface equality.
AlignmentPath levenshtein_align(std::span<const Token> ref,
                                std::span<const Token> hyp);

// Tallies a path. Throws StructuralError if the path does not cover
// 0..ref_len-1 exactly once in increasing order, or its hypothesis indices
// are not contiguous from 0.
AlignmentCounts count_edits(const AlignmentPath& path, std::size_t ref_len);

// Counts for a pair of already prepared texts in one view.
AlignmentCounts view_counts(std::span<const Token> ref,
                            std::span<const Token> hyp, TextView view);

// Word error rate of `hyp_text` against `ref_text` in `view`. Texts are
// tokenized as given; normalize first if needed.
double word_error_rate(std::string_view ref_text, std::string_view hyp_text,
                       TextView view, const PunctSet& puncts);

}  // namespace pcscore

#endif  // PCSCORE_ALIGN_H_
