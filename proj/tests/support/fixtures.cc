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

#include "fixtures.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pcscore::testing {
namespace {

const std::vector<std::string> kVocab = {
    "the", "dog", "ran", "home", "she", "said", "it", "was", "late",
    "we", "eat", "bob", "and", "then", "left", "a", "house", "of",
    "julie", "going", "to", "wrong", "done", "one", "i", "you", "now",
    "never", "there", "what"};

std::size_t pick(std::mt19937& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

std::string capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
  return w;
}

std::string upper(std::string w) {
  for (char& ch : w) {
    if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 32);
  }
  return w;
}

std::string flip_case(std::string w) {
  if (w.empty()) return w;
  if (w[0] >= 'a' && w[0] <= 'z') return capitalize(w);
  if (w[0] >= 'A' && w[0] <= 'Z') w[0] = static_cast<char>(w[0] + 32);
  return w;
}

}  // namespace

std::vector<oracle::Sym> to_syms(std::span<const Token> tokens,
                                 std::map<std::string, int>& ids) {
  std::vector<oracle::Sym> out;
  for (const auto& t : tokens) {
    auto [it, _] = ids.emplace(t.surface, static_cast<int>(ids.size()));
    out.push_back({t.is_punct(), it->second});
  }
  return out;
}

std::string random_reference(std::mt19937& rng,
                             const std::vector<std::string>& marks) {
  std::string out;
  std::size_t sentences = 1 + pick(rng, 3);
  for (std::size_t s = 0; s < sentences; ++s) {
    std::size_t len = 2 + pick(rng, 8);
    for (std::size_t k = 0; k < len; ++k) {
      std::string w = kVocab[pick(rng, kVocab.size())];
      if (k == 0 || chance(rng, 0.1)) w = capitalize(w);
      if (!out.empty()) out += ' ';
      out += w;
      if (k + 1 < len && chance(rng, 0.2)) out += marks[pick(rng, marks.size())];
    }
    out += marks[pick(rng, marks.size())];
  }
  return out;
}

std::string perturb(const std::string& reference, std::mt19937& rng,
                    const PunctSet& puncts) {
  const auto& marks = puncts.marks();
  std::vector<std::string> out;
  for (const auto& t : tokenize(normalize_transcript(reference, puncts), puncts)) {
    if (t.is_punct()) {
      if (chance(rng, 0.15)) continue;
      out.push_back(chance(rng, 0.1) ? marks[pick(rng, marks.size())] : t.surface);
    } else {
      if (chance(rng, 0.04)) continue;
      std::string w = t.surface;
      if (chance(rng, 0.05)) w = kVocab[pick(rng, kVocab.size())];
      if (chance(rng, 0.06)) w = flip_case(w);
      out.push_back(w);
      if (chance(rng, 0.04)) out.push_back(kVocab[pick(rng, kVocab.size())]);
    }
    if (chance(rng, 0.06)) out.push_back(marks[pick(rng, marks.size())]);
  }
  std::string joined;
  for (const auto& w : out) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return joined;
}

std::vector<SampleRecord> random_manifest(std::size_t n, std::uint32_t seed,
                                          const PunctSet& puncts) {
  std::mt19937 rng(seed);
  std::vector<SampleRecord> out;
  for (std::size_t i = 0; i < n; ++i) {
    SampleRecord r;
    r.id = "utt-" + std::to_string(i);
    r.text = random_reference(rng, puncts.marks());
    r.pred_text = chance(rng, 0.3) ? r.text : perturb(r.text, rng, puncts);
    r.duration = 1.0 + static_cast<double>(pick(rng, 200)) / 10.0;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<SampleRecord>> zero_wer_fixture(std::size_t total,
                                                        std::size_t zero_a,
                                                        std::size_t zero_b,
                                                        std::size_t overlap) {
  if (overlap > zero_a || overlap > zero_b || zero_a > total ||
      zero_b > total || zero_a + zero_b - overlap > total) {
    throw std::invalid_argument(
        "no manifest of " + std::to_string(total) + " samples has zero-WER "
        "subsets of " + std::to_string(zero_a) + " and " +
        std::to_string(zero_b) + " sharing " + std::to_string(overlap) +
        " (needs |A| + |B| - |A n B| = " +
        std::to_string(zero_a + zero_b - std::min(overlap, zero_a + zero_b)) +
        " <= total)");
  }
  // A covers [0, zero_a); B covers [0, overlap) and the next zero_b - overlap
  // samples after A.
  auto in_b = [&](std::size_t i) {
    return i < overlap || (i >= zero_a && i < zero_a + zero_b - overlap);
  };
  std::vector<std::vector<SampleRecord>> systems(2);
  for (std::size_t i = 0; i < total; ++i) {
    SampleRecord base;
    base.id = "s" + std::to_string(i);
    base.text = "The sample number " + std::to_string(i) + " is here, right?";
    SampleRecord a = base;
    SampleRecord b = base;
    const std::string n = std::to_string(i);
    const std::string wrong = "The sample numbers " + n + " is here, right?";
    a.pred_text = i < zero_a ? "the sample number " + n + " is here right" : wrong;
    b.pred_text = in_b(i) ? "The sample number " + n + " is here. Right?" : wrong;
    systems[0].push_back(std::move(a));
    systems[1].push_back(std::move(b));
  }
  return systems;
}

RestoreFixture restore_fixture(std::uint32_t seed, std::size_t min_words,
                               std::size_t per_category) {
  std::mt19937 rng(seed);
  const std::vector<std::string> onsets = {"b", "d", "f", "g", "k", "l", "m",
                                           "n", "p", "r", "s", "t", "v", "z",
                                           "br", "st", "tr", "sh"};
  const std::vector<std::string> vowels = {"a", "e", "i", "o", "u"};
  std::set<std::string> seen;
  std::vector<std::string> vocab;
  while (vocab.size() < 1500) {
    std::string w;
    std::size_t syllables = 2 + pick(rng, 2);
    for (std::size_t s = 0; s < syllables; ++s) {
      w += onsets[pick(rng, onsets.size())] + vowels[pick(rng, vowels.size())];
    }
    if (seen.insert(w).second) vocab.push_back(w);
  }

  enum class Kind { kFiller, kKept, kUnicode, kDeviation, kShort, kUpper };
  std::vector<Kind> plan;
  for (Kind k : {Kind::kKept, Kind::kUnicode, Kind::kDeviation, Kind::kShort,
                 Kind::kUpper}) {
    plan.insert(plan.end(), per_category, k);
  }
  std::shuffle(plan.begin(), plan.end(), rng);

  RestoreFixture fx;
  std::size_t next_case = 0;
  std::size_t novel = 0;
  auto emit_sentence = [&](Kind kind) {
    std::size_t len = kind == Kind::kShort ? 2 + pick(rng, 2) : 8 + pick(rng, 7);
    std::vector<std::string> words;
    for (std::size_t k = 0; k < len; ++k) words.push_back(vocab[pick(rng, vocab.size())]);

    std::vector<std::string> source_words = words;
    if (kind == Kind::kUnicode) {
      // Accent the first vowel of one word: "dorano" -> "doráno".
      std::string& w = source_words[pick(rng, len)];
      static const std::map<char, std::string> accent = {
          {'a', "á"}, {'e', "é"}, {'i', "í"}, {'o', "ó"},
          {'u', "ú"}};
      std::size_t at = w.find_first_of("aeiou");
      w = w.substr(0, at) + accent.at(w[at]) + w.substr(at + 1);
    }

    bool quoted = chance(rng, 0.2);
    std::string sentence = quoted ? "“" : "";
    for (std::size_t k = 0; k < len; ++k) {
      std::string w = k == 0 ? capitalize(source_words[k]) : source_words[k];
      if (kind == Kind::kUpper) w = upper(w);
      sentence += w;
      if (k + 1 < len) {
        if (chance(rng, 0.15)) sentence += ",";
        sentence += chance(rng, 0.05) ? "\n" : " ";
      }
    }
    sentence += chance(rng, 0.2) ? "?" : ".";
    if (quoted) sentence += "”";
    fx.source += sentence;
    fx.source += chance(rng, 0.1) ? "\n\n" : " ";
    fx.source_words += len;

    if (kind == Kind::kFiller) return;
    std::vector<std::string> transcript = words;
    if (kind == Kind::kDeviation) {
      std::vector<std::size_t> slots(len);
      for (std::size_t k = 0; k < len; ++k) slots[k] = k;
      std::shuffle(slots.begin(), slots.end(), rng);
      for (std::size_t k = 0; k < 3; ++k) {
        transcript[slots[k]] = "xq" + std::to_string(novel++);
      }
    }
    RestoreCase c;
    c.sample.id = "seg-" + std::to_string(next_case++);
    for (const auto& w : transcript) {
      if (!c.sample.text.empty()) c.sample.text += ' ';
      c.sample.text += w;
    }
    c.sample.duration = kind == Kind::kShort
                            ? 0.5 + static_cast<double>(pick(rng, 45)) / 100.0
                            : 1.5 + 0.35 * static_cast<double>(len);
    switch (kind) {
      case Kind::kUnicode:
        c.expected = DropReason::kUnicodeMismatch;
        break;
      case Kind::kDeviation:
        c.expected = DropReason::kDeviationExceeded;
        break;
      case Kind::kShort:
        c.expected = DropReason::kTooShort;
        break;
      case Kind::kUpper:
        c.expected = DropReason::kAllUppercase;
        break;
      default:
        break;
    }
    fx.cases.push_back(std::move(c));
  };

  // Spread the planned sentences through the filler text.
  std::size_t words_per_slot = min_words / (plan.size() + 1);
  for (Kind k : plan) {
    std::size_t target = fx.source_words + words_per_slot;
    while (fx.source_words + 8 < target) emit_sentence(Kind::kFiller);
    emit_sentence(k);
  }
  while (fx.source_words < min_words) emit_sentence(Kind::kFiller);
  return fx;
}

}  // namespace pcscore::testing
