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

#ifndef PCSCORE_TEXTNORM_H_
#define PCSCORE_TEXTNORM_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcscore {

enum class TokenClass { kWord, kPunct };

// A whitespace-free unit of text. Punctuation tokens carry their mark as the
// surface.
struct Token {
  std::string surface;
  TokenClass cls = TokenClass::kWord;

  bool is_punct() const { return cls == TokenClass::kPunct; }
  bool operator==(const Token&) const = default;
};

// Ordered set of punctuation marks that are scored as standalone tokens.
// Marks may span several characters ("...") but are only ever matched as
// whole tokens.
class PunctSet {
 public:
  // Period, comma and question mark.
  PunctSet();
  // Throws std::invalid_argument on an empty set, duplicates, empty marks or
  // marks containing whitespace.
  explicit PunctSet(std::vector<std::string> marks);

  bool contains(std::string_view token) const;
  const std::vector<std::string>& marks() const { return marks_; }

  // Stable textual identity, used to check that reports are compatible.
  std::string fingerprint() const;

  bool operator==(const PunctSet&) const = default;

 private:
  std::vector<std::string> marks_;
  std::size_t longest_ = 0;

  friend std::string normalize_transcript(std::string_view, const PunctSet&);
};

enum class TextView {
  kPC,     // words, case and punctuation
  kC,      // words and case
  kPlain,  // lowercased words
};

std::string_view to_string(TextView view);

// Keeps only marks from `puncts`, splits them off as standalone tokens and
// collapses whitespace. Punctuation inside a word ("let's", "a.b") is kept as
// part of the word. Idempotent.
std::string normalize_transcript(std::string_view raw, const PunctSet& puncts);

// Whitespace tokenization. A token is punctuation iff it equals a mark.
std::vector<Token> tokenize(std::string_view text, const PunctSet& puncts);

std::string join(std::span<const Token> tokens);

// Drops punctuation tokens for kC; additionally lowercases words for kPlain.
std::string project(std::string_view text, TextView view,
                    const PunctSet& puncts);
std::vector<Token> project_tokens(std::span<const Token> tokens,
                                  TextView view);

// Unicode full lowercase mapping (root locale).
std::string to_lower(std::string_view text);
// Canonical composition (NFC).
std::string to_nfc(std::string_view text);
// NFD with combining marks removed, then lowercased: "Dvořák" -> "dvorak".
std::string fold_diacritics(std::string_view text);

// True if the first alphabetic character is uppercase.
bool is_capitalized(std::string_view word);
// True if the text has at least one letter and no lowercase letters.
bool is_all_uppercase(std::string_view text);

// One whitespace-delimited chunk of raw text with its leading and trailing
// punctuation peeled off. Offsets are byte positions into the source text;
// core is empty when the chunk is punctuation only.
struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t core_begin = 0;
  std::size_t core_end = 0;

  bool has_core() const { return core_begin < core_end; }
};

std::vector<Chunk> split_chunks(std::string_view text);

// Options shared by everything that prepares text pairs for scoring.
struct TextOptions {
  PunctSet puncts;
  bool normalize = true;

  std::string prepare(std::string_view text) const {
    return normalize ? normalize_transcript(text, puncts) : std::string(text);
  }
  std::vector<Token> prepare_tokens(std::string_view text) const {
    return tokenize(prepare(text), puncts);
  }
};

}  // namespace pcscore

#endif  // PCSCORE_TEXTNORM_H_
