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

#include "pcscore/textnorm.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <stdexcept>

namespace pcscore {
namespace {

// Decodes the code point starting at `pos` and advances `pos` past it.
// Invalid sequences decode to a negative value.
UChar32 next_code_point(std::string_view text, std::size_t& pos) {
  int32_t i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(text.data(), i, static_cast<int32_t>(text.size()), c);
  pos = static_cast<std::size_t>(i);
  return c;
}

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }
bool is_punct(UChar32 c) { return c >= 0 && u_ispunct(c); }

bool contains_space(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    if (is_space(next_code_point(text, pos))) return true;
  }
  return false;
}

template <typename Fn>
void for_each_word(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    UChar32 c = next_code_point(text, pos);
    if (is_space(c)) continue;
    std::size_t end = pos;
    while (pos < text.size()) {
      std::size_t before = pos;
      if (is_space(next_code_point(text, pos))) {
        pos = before;
        break;
      }
      end = pos;
    }
    fn(start, end);
  }
}

icu::UnicodeString to_unicode(std::string_view text) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
}

std::string to_utf8(const icu::UnicodeString& text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

}  // namespace

PunctSet::PunctSet() : PunctSet(std::vector<std::string>{".", ",", "?"}) {}

PunctSet::PunctSet(std::vector<std::string> marks) : marks_(std::move(marks)) {
  if (marks_.empty()) throw std::invalid_argument("punctuation set is empty");
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    const std::string& m = marks_[i];
    if (m.empty()) throw std::invalid_argument("empty punctuation mark");
    if (contains_space(m)) {
      throw std::invalid_argument("punctuation mark contains whitespace: '" +
                                  m + "'");
    }
    if (std::find(marks_.begin(), marks_.begin() + i, m) !=
        marks_.begin() + i) {
      throw std::invalid_argument("duplicate punctuation mark: '" + m + "'");
    }
    longest_ = std::max(longest_, m.size());
  }
}

bool PunctSet::contains(std::string_view token) const {
  if (token.size() > longest_) return false;
  return std::find(marks_.begin(), marks_.end(), token) != marks_.end();
}

std::string PunctSet::fingerprint() const {
  std::string out;
  for (const auto& m : marks_) {
    if (!out.empty()) out += ' ';
    out += m;
  }
  return out;
}

std::string_view to_string(TextView view) {
  switch (view) {
    case TextView::kPC:
      return "pc";
    case TextView::kC:
      return "c";
    case TextView::kPlain:
      return "plain";
  }
  return "?";
}

std::vector<Chunk> split_chunks(std::string_view text) {
  std::vector<Chunk> chunks;
  for_each_word(text, [&](std::size_t begin, std::size_t end) {
    Chunk chunk{begin, end, end, end};
    std::string_view word = text.substr(0, end);
    bool seen_core = false;
    for (std::size_t pos = begin; pos < end;) {
      std::size_t start = pos;
      if (!is_punct(next_code_point(word, pos))) {
        if (!seen_core) chunk.core_begin = start;
        seen_core = true;
        chunk.core_end = pos;
      }
    }
    chunks.push_back(chunk);
  });
  return chunks;
}

std::string normalize_transcript(std::string_view raw, const PunctSet& puncts) {
  std::string out;
  auto emit = [&](std::string_view token) {
    if (!out.empty()) out += ' ';
    out.append(token);
  };
  // Greedy longest-mark segmentation of a punctuation run; characters that do
  // not start any mark are dropped.
  auto segment = [&](std::string_view run) {
    std::size_t pos = 0;
    while (pos < run.size()) {
      std::size_t best = 0;
      for (const auto& m : puncts.marks_) {
        if (m.size() > best && run.substr(pos).starts_with(m)) best = m.size();
      }
      if (best > 0) {
        emit(run.substr(pos, best));
        pos += best;
      } else {
        next_code_point(run, pos);
      }
    }
  };

  for (const Chunk& chunk : split_chunks(raw)) {
    std::string_view whole = raw.substr(chunk.begin, chunk.end - chunk.begin);
    if (puncts.contains(whole)) {
      emit(whole);
      continue;
    }
    segment(raw.substr(chunk.begin, chunk.core_begin - chunk.begin));
    if (chunk.has_core()) {
      emit(raw.substr(chunk.core_begin, chunk.core_end - chunk.core_begin));
    }
    segment(raw.substr(chunk.core_end, chunk.end - chunk.core_end));
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text, const PunctSet& puncts) {
  std::vector<Token> tokens;
  for_each_word(text, [&](std::size_t begin, std::size_t end) {
    std::string_view surface = text.substr(begin, end - begin);
    tokens.push_back(Token{std::string(surface), puncts.contains(surface)
                                                     ? TokenClass::kPunct
                                                     : TokenClass::kWord});
  });
  return tokens;
}

std::string join(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

std::vector<Token> project_tokens(std::span<const Token> tokens,
                                  TextView view) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (view != TextView::kPC && t.is_punct()) continue;
    if (view == TextView::kPlain) {
      out.push_back(Token{to_lower(t.surface), TokenClass::kWord});
    } else {
      out.push_back(t);
    }
  }
  return out;
}

std::string project(std::string_view text, TextView view,
                    const PunctSet& puncts) {
  if (view == TextView::kPC) return std::string(text);
  return join(project_tokens(tokenize(text, puncts), view));
}

std::string to_lower(std::string_view text) {
  bool ascii_lower = std::all_of(text.begin(), text.end(), [](char ch) {
    return static_cast<unsigned char>(ch) < 0x80 && !(ch >= 'A' && ch <= 'Z');
  });
  if (ascii_lower) return std::string(text);
  return to_utf8(to_unicode(text).toLower(icu::Locale::getRoot()));
}

std::string to_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString out = nfc->normalize(to_unicode(text), status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  return to_utf8(out);
}

std::string fold_diacritics(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFD unavailable");
  icu::UnicodeString decomposed = nfd->normalize(to_unicode(text), status);
  if (U_FAILURE(status)) throw std::runtime_error("NFD normalization failed");
  icu::UnicodeString stripped;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) stripped.append(c);
    i += U16_LENGTH(c);
  }
  return to_nfc(to_utf8(stripped.toLower(icu::Locale::getRoot())));
}

bool is_capitalized(std::string_view word) {
  for (std::size_t pos = 0; pos < word.size();) {
    UChar32 c = next_code_point(word, pos);
    if (c >= 0 && u_isalpha(c)) return u_isupper(c) || u_istitle(c);
  }
  return false;
}

bool is_all_uppercase(std::string_view text) {
  bool any_upper = false;
  for (std::size_t pos = 0; pos < text.size();) {
    UChar32 c = next_code_point(text, pos);
    if (c < 0 || !u_isalpha(c)) continue;
    if (u_islower(c)) return false;
    any_upper = any_upper || u_isupper(c) || u_istitle(c);
  }
  return any_upper;
}

}  // namespace pcscore
