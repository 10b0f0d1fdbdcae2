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

#ifndef PCSCORE_TESTS_SUPPORT_FIXTURES_H_
#define PCSCORE_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oracles.h"
#include "pcscore/manifest.h"
#include "pcscore/restore.h"
#include "pcscore/textnorm.h"

namespace pcscore::testing {

// Maps tokens to oracle symbols, interning surfaces in the given tables.
std::vector<oracle::Sym> to_syms(std::span<const Token> tokens,
                                 std::map<std::string, int>& ids);

// Raw reference text: one to three sentences over a small vocabulary with
// sentence case and marks attached to words ("Dogs run, fast.").
std::string random_reference(std::mt19937& rng,
                             const std::vector<std::string>& marks);

// A hypothesis derived from `reference` by random word, case and
// punctuation edits. Output is space-separated tokens.
std::string perturb(const std::string& reference, std::mt19937& rng,
                    const PunctSet& puncts);

std::vector<SampleRecord> random_manifest(std::size_t n, std::uint32_t seed,
                                          const PunctSet& puncts = PunctSet());

// Two-system manifests over `total` shared references in which system A has
// zero plain WER on `zero_a` samples, system B on `zero_b`, and `overlap` of
// them are shared. Throws std::invalid_argument when no such assignment
// exists (zero_a + zero_b - overlap > total, or overlap above either size).
std::vector<std::vector<SampleRecord>> zero_wer_fixture(std::size_t total,
                                                        std::size_t zero_a,
                                                        std::size_t zero_b,
                                                        std::size_t overlap);

struct RestoreCase {
  SampleRecord sample;  // text is the plain transcript
  std::optional<DropReason> expected;
};

struct RestoreFixture {
  std::string source;
  std::size_t source_words = 0;
  std::vector<RestoreCase> cases;
};

// A synthetic book of at least `min_words` words with `per_category`
// transcripts for each outcome: kept and each of the four drop reasons.
RestoreFixture restore_fixture(std::uint32_t seed, std::size_t min_words = 5000,
                               std::size_t per_category = 10);

}  // namespace pcscore::testing

#endif  // PCSCORE_TESTS_SUPPORT_FIXTURES_H_
