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

#include "pcscore/restore.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "pcscore/align.h"
#include "pcscore/errors.h"
#include "pcscore/percent.h"

namespace pcscore {
namespace {

constexpr char kKeySep = '\x1f';
constexpr std::size_t kMaxAnchors = 8;
constexpr std::size_t kMaxOccurrences = 64;

std::string ngram_key(std::span<const std::string> words) {
  std::string key;
  for (const auto& w : words) {
    if (!key.empty()) key += kKeySep;
    key += w;
  }
  return key;
}

struct Fit {
  std::size_t cost = std::numeric_limits<std::size_t>::max();
  std::size_t skew = 0;  // |span length - transcript length|
  std::size_t begin = 0;
  std::size_t end = 0;

  bool better_than(const Fit& other) const {
    return std::tie(cost, skew, begin, end) <
           std::tie(other.cost, other.skew, other.begin, other.end);
  }
};

// Fitting alignment: the whole transcript against any contiguous run of
// source words in [lo, hi). Among equally cheap spans the one closest in
// length to the transcript wins, then the earliest. The backtrace prefers the
// diagonal, then skipping a transcript word, then skipping a source word.
Fit fit_window(std::span<const std::string> query,
               std::span<const std::string> words, std::size_t lo,
               std::size_t hi) {
  const std::size_t n = query.size();
  const std::size_t w = hi - lo;
  const std::size_t width = w + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  for (std::size_t i = 1; i <= n; ++i) {
    cost[i * width] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= w; ++j) {
      bool eq = query[i - 1] == words[lo + j - 1];
      std::uint32_t best = cost[(i - 1) * width + j - 1] + (eq ? 0 : 1);
      best = std::min(best, cost[(i - 1) * width + j] + 1);
      best = std::min(best, cost[i * width + j - 1] + 1);
      cost[i * width + j] = best;
    }
  }
  std::uint32_t least = cost[n * width];
  for (std::size_t j = 1; j <= w; ++j) least = std::min(least, cost[n * width + j]);

  Fit best;
  for (std::size_t end = 0; end <= w; ++end) {
    if (cost[n * width + end] != least) continue;
    std::size_t i = n;
    std::size_t j = end;
    while (i > 0) {
      std::uint32_t here = cost[i * width + j];
      if (j > 0 && cost[(i - 1) * width + j - 1] +
                           (query[i - 1] == words[lo + j - 1] ? 0 : 1) ==
                       here) {
        --i;
        --j;
      } else if (cost[(i - 1) * width + j] + 1 == here) {
        --i;
      } else {
        --j;
      }
    }
    std::size_t len = end - j;
    Fit fit{least, len > n ? len - n : n - len, lo + j, lo + end};
    if (fit.better_than(best)) best = fit;
  }
  return best;
}

std::size_t word_edits(std::span<const std::string> a,
                       std::span<const std::string> b) {
  return levenshtein_align(a.size(), b.size(),
                           [&](std::size_t i, std::size_t j) {
                             return a[i] == b[j];
                           })
      .errors();
}

}  // namespace

SourceText::SourceText(std::string_view text, std::size_t anchor_order)
    : text_(to_nfc(text)), anchor_order_(std::max<std::size_t>(anchor_order, 1)) {
  for (const Chunk& chunk : split_chunks(text_)) {
    if (!chunk.has_core()) continue;
    std::string_view core =
        std::string_view(text_).substr(chunk.core_begin,
                                       chunk.core_end - chunk.core_begin);
    tokens_.push_back(to_lower(core));
    folded_.push_back(fold_diacritics(core));
    spans_.push_back(Span{chunk.core_begin, chunk.core_end, chunk.end});
  }
  for (std::size_t i = 0; i < folded_.size(); ++i) {
    unigrams_[folded_[i]].push_back(static_cast<std::uint32_t>(i));
  }
  if (anchor_order_ > 1) {
    for (std::size_t i = 0; i + anchor_order_ <= folded_.size(); ++i) {
      ngrams_[ngram_key(std::span(folded_).subspan(i, anchor_order_))]
          .push_back(static_cast<std::uint32_t>(i));
    }
  }
}

std::string SourceText::extract(std::size_t begin, std::size_t end) const {
  if (begin >= end || end > spans_.size()) return {};
  std::size_t from = spans_[begin].core_begin;
  return text_.substr(from, spans_[end - 1].chunk_end - from);
}

std::span<const std::uint32_t> SourceText::occurrences(
    std::span<const std::string> folded_ngram) const {
  const auto& index = folded_ngram.size() == 1 ? unigrams_ : ngrams_;
  if (folded_ngram.size() != 1 && folded_ngram.size() != anchor_order_) {
    return {};
  }
  auto it = index.find(ngram_key(folded_ngram));
  if (it == index.end()) return {};
  return it->second;
}

std::string_view to_string(DropReason reason) {
  switch (reason) {
    case DropReason::kUnicodeMismatch:
      return "unicode_mismatch";
    case DropReason::kDeviationExceeded:
      return "deviation_exceeded";
    case DropReason::kTooShort:
      return "too_short";
    case DropReason::kAllUppercase:
      return "all_uppercase";
  }
  return "?";
}

LocateResult locate(std::string_view transcript, const SourceText& source,
                    const RestoreConfig& config) {
  std::vector<std::string> words;
  std::vector<std::string> folded;
  for (const auto& t : project_tokens(tokenize(to_nfc(transcript), config.puncts),
                                      TextView::kPlain)) {
    folded.push_back(fold_diacritics(t.surface));
    words.push_back(t.surface);
  }

  LocateResult result;
  const std::size_t n = words.size();
  const std::size_t total = source.size();
  if (n == 0 || total == 0) {
    result.deviation = result.folded_deviation = n;
    return result;
  }

  const std::size_t order = n >= source.anchor_order() ? source.anchor_order() : 1;
  struct Anchor {
    std::size_t count;
    std::size_t offset;
    std::span<const std::uint32_t> positions;
  };
  std::vector<Anchor> anchors;
  for (std::size_t o = 0; o + order <= n; ++o) {
    auto pos = source.occurrences(std::span(folded).subspan(o, order));
    if (!pos.empty()) anchors.push_back(Anchor{pos.size(), o, pos});
  }
  std::sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) {
    return std::tie(a.count, a.offset) < std::tie(b.count, b.offset);
  });

  std::set<std::ptrdiff_t> starts;
  for (std::size_t k = 0; k < anchors.size() && k < kMaxAnchors; ++k) {
    if (k > 0 && anchors[k].count > kMaxOccurrences) break;
    for (std::uint32_t p : anchors[k].positions) {
      starts.insert(static_cast<std::ptrdiff_t>(p) -
                    static_cast<std::ptrdiff_t>(anchors[k].offset));
    }
  }

  const std::ptrdiff_t slack =
      static_cast<std::ptrdiff_t>(config.max_deviation + order);
  Fit best;
  for (std::ptrdiff_t start : starts) {
    std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, start - slack);
    std::ptrdiff_t hi = std::min<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(total),
        start + static_cast<std::ptrdiff_t>(n) + slack);
    if (lo >= hi) continue;
    Fit fit = fit_window(folded, source.folded(), static_cast<std::size_t>(lo),
                         static_cast<std::size_t>(hi));
    if (fit.better_than(best)) best = fit;
  }
  if (best.cost > config.max_deviation) {
    Fit full = fit_window(folded, source.folded(), 0, total);
    if (full.better_than(best)) best = full;
  }

  result.found = best.cost <= config.max_deviation;
  result.begin = best.begin;
  result.end = best.end;
  result.folded_deviation = best.cost;
  result.deviation = word_edits(
      words, std::span(source.tokens()).subspan(best.begin, best.end - best.begin));
  return result;
}

RestoreDecision restore_sample(std::string_view transcript,
                               const SourceText& source,
                               std::optional<double> duration,
                               const RestoreConfig& config) {
  LocateResult loc = locate(transcript, source, config);
  RestoreDecision decision;
  if (loc.found) {
    decision.restored_text = source.extract(loc.begin, loc.end);
    decision.deviation = loc.deviation;
  } else {
    decision.deviation = config.max_deviation + 1;
  }
  decision.duration_checked = duration.has_value();

  auto fires = [&](DropReason rule) {
    switch (rule) {
      case DropReason::kUnicodeMismatch:
        return loc.found && loc.deviation > loc.folded_deviation;
      case DropReason::kDeviationExceeded:
        return !loc.found || loc.deviation > config.max_deviation;
      case DropReason::kTooShort:
        return duration.has_value() && *duration < config.min_duration;
      case DropReason::kAllUppercase:
        return decision.restored_text.has_value() &&
               is_all_uppercase(*decision.restored_text);
    }
    return false;
  };
  for (DropReason rule : config.rule_order) {
    if (fires(rule)) {
      decision.reason = rule;
      break;
    }
  }
  return decision;
}

std::vector<RetentionRow> retention_report(
    std::span<const RetentionItem> items) {
  std::vector<RetentionRow> rows;
  for (const auto& item : items) {
    if (!item.duration) {
      throw PreconditionError("retention needs a duration for every sample");
    }
    auto it = std::find_if(rows.begin(), rows.end(), [&](const RetentionRow& r) {
      return r.group == item.group;
    });
    if (it == rows.end()) {
      rows.push_back(RetentionRow{item.group});
      it = rows.end() - 1;
    }
    ++it->original_samples;
    it->original_seconds += *item.duration;
    if (item.kept) {
      ++it->kept_samples;
      it->kept_seconds += *item.duration;
    }
  }
  return rows;
}

std::string retention_to_table(std::span<const RetentionRow> rows) {
  std::ostringstream out;
  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.group.size());
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-*s  %14s  %14s  %13s\n",
                static_cast<int>(width), "Subset", "Original (hrs)",
                "Restored (hrs)", "Retention (%)");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-*s  %14.2f  %14.2f  %13s\n",
                  static_cast<int>(width), r.group.c_str(), r.original_hours(),
                  r.kept_hours(), format_percent(r.retention()).c_str());
    out << buf;
  }
  return out.str();
}

RestoreOutcome restore_manifest(std::span<const SampleRecord> samples,
                                const std::map<std::string, SourceText>& sources,
                                const RestoreConfig& config) {
  RestoreOutcome out;
  std::vector<RetentionItem> items;
  bool all_durations = true;
  for (const auto& sample : samples) {
    const SourceText* source = nullptr;
    if (auto name = sample.extra_string("source")) {
      auto it = sources.find(*name);
      if (it == sources.end()) {
        throw ManifestError("unknown source \"" + *name + "\"", sample.line);
      }
      source = &it->second;
    } else if (sources.size() == 1) {
      source = &sources.begin()->second;
    } else {
      throw ManifestError("sample \"" + sample.id +
                              "\" does not name its \"source\" document",
                          sample.line);
    }

    RestoreDecision decision =
        restore_sample(sample.text, *source, sample.duration, config);
    if (decision.kept()) {
      SampleRecord restored = sample;
      restored.text = *decision.restored_text;
      out.kept.push_back(std::move(restored));
    }
    all_durations = all_durations && sample.duration.has_value();
    items.push_back(RetentionItem{sample.extra_string("subset").value_or("all"),
                                  sample.duration, decision.kept()});
    out.decisions.push_back(RestoredSample{sample.id, std::move(decision)});
  }
  if (all_durations) out.retention = retention_report(items);
  return out;
}

std::string decisions_to_tsv(std::span<const RestoredSample> decisions) {
  std::string out = "id\tverdict\treason\tdeviation\n";
  for (const auto& d : decisions) {
    out += d.id;
    out += d.decision.kept() ? "\tkept\t-\t" : "\tdropped\t";
    if (!d.decision.kept()) {
      out += to_string(*d.decision.reason);
      out += '\t';
    }
    out += std::to_string(d.decision.deviation);
    out += '\n';
  }
  return out;
}

}  // namespace pcscore
