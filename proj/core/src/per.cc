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

#include "pcscore/per.h"

#include <algorithm>
#include <numeric>

namespace pcscore {
namespace {

std::uint64_t sum(const std::map<std::string, std::uint64_t>& m) {
  return std::accumulate(
      m.begin(), m.end(), std::uint64_t{0},
      [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

void add_into(std::map<std::string, std::uint64_t>& dst,
              const std::map<std::string, std::uint64_t>& src) {
  for (const auto& [k, v] : src) dst[k] += v;
}

}  // namespace

MaskedTokens mask_punct(std::span<const Token> tokens) {
  MaskedTokens out;
  out.tokens.reserve(tokens.size());
  out.marks.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.is_punct()) {
      out.tokens.push_back(Token{std::string(kMaskLabel), TokenClass::kPunct});
      out.marks.emplace_back(t.surface);
    } else {
      if (t.surface == kMaskLabel) {
        throw InputCollisionError("word token collides with mask label " +
                                  std::string(kMaskLabel));
      }
      out.tokens.push_back(t);
      out.marks.emplace_back(std::nullopt);
    }
  }
  return out;
}

void PerCounts::verify() const {
  std::uint64_t matched = substitutions + correct;
  if (matched > ref_marks || deletions != ref_marks - matched) {
    throw StructuralError("punctuation deletions do not close: D=" +
                          std::to_string(deletions) +
                          " N_ref=" + std::to_string(ref_marks));
  }
  if (matched > hyp_marks || insertions != hyp_marks - matched) {
    throw StructuralError("punctuation insertions do not close: I=" +
                          std::to_string(insertions) +
                          " N_hyp=" + std::to_string(hyp_marks));
  }
  std::uint64_t subs = 0;
  for (const auto& [from, row] : substitution_matrix) {
    if (row.contains(from)) {
      throw StructuralError("substitution of mark '" + from + "' by itself");
    }
    subs += sum(row);
  }
  if (subs != substitutions || sum(deletions_by_mark) != deletions ||
      sum(insertions_by_mark) != insertions ||
      sum(correct_by_mark) != correct) {
    throw StructuralError("per-mark punctuation tallies disagree with totals");
  }
}

PerCounts& PerCounts::operator+=(const PerCounts& other) {
  correct += other.correct;
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  ref_marks += other.ref_marks;
  hyp_marks += other.hyp_marks;
  for (const auto& [from, row] : other.substitution_matrix) {
    add_into(substitution_matrix[from], row);
  }
  add_into(deletions_by_mark, other.deletions_by_mark);
  add_into(insertions_by_mark, other.insertions_by_mark);
  add_into(correct_by_mark, other.correct_by_mark);
  return *this;
}

PerCounts per_align(std::span<const Token> ref, std::span<const Token> hyp) {
  return per_align(ref, hyp, nullptr);
}

PerCounts per_align(std::span<const Token> ref, std::span<const Token> hyp,
                    AlignmentPath* path_out) {
  // Masked equality: any two marks match in position, words match by surface.
  AlignmentPath path = levenshtein_align(
      ref.size(), hyp.size(), [&](std::size_t i, std::size_t j) {
        if (ref[i].is_punct() || hyp[j].is_punct()) {
          return ref[i].is_punct() && hyp[j].is_punct();
        }
        return ref[i].surface == hyp[j].surface;
      });

  PerCounts counts;
  std::vector<bool> ref_matched(ref.size());
  std::vector<bool> hyp_matched(hyp.size());
  for (const auto& op : path.ops) {
    if (op.kind != EditKind::kCorrect) continue;
    const Token& r = ref[*op.ref_index];
    const Token& h = hyp[*op.hyp_index];
    if (!r.is_punct()) continue;
    ref_matched[*op.ref_index] = true;
    hyp_matched[*op.hyp_index] = true;
    if (r.surface == h.surface) {
      ++counts.correct;
      ++counts.correct_by_mark[r.surface];
    } else {
      ++counts.substitutions;
      ++counts.substitution_matrix[r.surface][h.surface];
    }
  }

  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (!ref[i].is_punct()) continue;
    ++counts.ref_marks;
    if (!ref_matched[i]) ++counts.deletions_by_mark[ref[i].surface];
  }
  for (std::size_t j = 0; j < hyp.size(); ++j) {
    if (!hyp[j].is_punct()) continue;
    ++counts.hyp_marks;
    if (!hyp_matched[j]) ++counts.insertions_by_mark[hyp[j].surface];
  }
  counts.deletions = counts.ref_marks - (counts.substitutions + counts.correct);
  counts.insertions = counts.hyp_marks - (counts.substitutions + counts.correct);
  counts.verify();

  if (path_out) *path_out = std::move(path);
  return counts;
}

PerRate punctuation_error_rate(const PerCounts& counts) {
  std::uint64_t denominator = counts.errors() + counts.correct;
  if (denominator == 0) return PerRate{0.0, true};
  return PerRate{static_cast<double>(counts.errors()) /
                     static_cast<double>(denominator),
                 false};
}

Breakdown per_breakdown(const PerCounts& counts,
                        std::span<const std::string> marks) {
  std::vector<std::string> order(marks.begin(), marks.end());
  auto note = [&](const std::string& m) {
    if (std::find(order.begin(), order.end(), m) == order.end()) {
      order.push_back(m);
    }
  };
  std::vector<std::string> seen;
  for (const auto& [m, _] : counts.correct_by_mark) seen.push_back(m);
  for (const auto& [m, _] : counts.deletions_by_mark) seen.push_back(m);
  for (const auto& [m, _] : counts.insertions_by_mark) seen.push_back(m);
  for (const auto& [m, row] : counts.substitution_matrix) {
    seen.push_back(m);
    for (const auto& [to, _] : row) seen.push_back(to);
  }
  std::sort(seen.begin(), seen.end());
  for (const auto& m : seen) note(m);

  auto lookup = [](const std::map<std::string, std::uint64_t>& m,
                   const std::string& key) -> std::uint64_t {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  };

  Breakdown out;
  for (const auto& m : order) {
    BreakdownColumn col;
    col.mark = m;
    col.correct = lookup(counts.correct_by_mark, m);
    col.deletions = lookup(counts.deletions_by_mark, m);
    col.insertions = lookup(counts.insertions_by_mark, m);
    auto row = counts.substitution_matrix.find(m);
    for (const auto& to : order) {
      if (to == m) continue;
      std::uint64_t n =
          row == counts.substitution_matrix.end() ? 0 : lookup(row->second, to);
      col.substitutions_to[to] = n;
      col.substitutions += n;
    }
    if (col.total() == 0) {
      out.unseen.push_back(m);
    } else {
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

}  // namespace pcscore
