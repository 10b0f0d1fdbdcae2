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

#include "pcscore/corpus.h"

#include <algorithm>
#include <exception>
#include <thread>

#include "pcscore/errors.h"

namespace pcscore {
namespace {

struct SampleResult {
  SampleDetail detail;
  bool zero_wer = false;
  F1Counts f1;
};

SampleResult score(const SampleRecord& sample, const EvalConfig& config) {
  TextOptions text = config.text_options();
  std::vector<Token> ref = text.prepare_tokens(sample.text);
  std::vector<Token> hyp = text.prepare_tokens(*sample.pred_text);
  SampleResult out;
  out.detail.id = sample.id;
  out.detail.plain = view_counts(ref, hyp, TextView::kPlain);
  out.detail.cased = view_counts(ref, hyp, TextView::kC);
  out.detail.full = view_counts(ref, hyp, TextView::kPC);
  out.detail.per = per_align(ref, hyp);
  if (config.f1 && plain_views_equal(ref, hyp)) {
    out.zero_wer = true;
    out.f1 = score_slots(ref, hyp);
  }
  return out;
}

std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (char ch : s) n += (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  return n;
}

void pad(std::string& line, std::string_view cell, std::size_t width) {
  line += cell;
  line.append(width - display_width(cell) + 1, ' ');
}

void sort_details(std::vector<SampleDetail>& details) {
  std::sort(details.begin(), details.end(),
            [](const SampleDetail& a, const SampleDetail& b) {
              return a.id < b.id;
            });
}

}  // namespace

std::string EvalConfig::fingerprint() const {
  return "puncts=" + puncts.fingerprint() +
         ";normalize=" + (normalize ? "1" : "0") + ";f1=" + (f1 ? "1" : "0") +
         ";macro_per=" + (macro_per ? "1" : "0") +
         ";details=" + (details ? "1" : "0");
}

std::optional<double> CorpusReport::macro_per_rate() const {
  if (!config.macro_per || macro_per_samples == 0) return std::nullopt;
  double sum = 0.0;
  for (const auto& [den, num] : macro_per_terms) {
    sum += static_cast<double>(num) / static_cast<double>(den);
  }
  return sum / static_cast<double>(macro_per_samples);
}

SampleDetail score_sample(const SampleRecord& sample, const TextOptions& text) {
  if (!sample.pred_text) {
    throw PreconditionError("sample \"" + sample.id + "\" has no hypothesis");
  }
  EvalConfig config;
  config.puncts = text.puncts;
  config.normalize = text.normalize;
  return score(sample, config).detail;
}

CorpusReport empty_report(const EvalConfig& config) {
  CorpusReport report;
  report.config = config;
  report.config.workers = 1;
  if (config.f1) report.f1 = F1Section{};
  return report;
}

CorpusReport evaluate_corpus(std::span<const SampleRecord> samples,
                             const EvalConfig& config) {
  CorpusReport report = empty_report(config);

  std::vector<const SampleRecord*> scored;
  for (const auto& s : samples) {
    if (s.pred_text) {
      scored.push_back(&s);
    } else {
      report.skipped.push_back(s.id);
    }
  }
  std::sort(report.skipped.begin(), report.skipped.end());

  std::vector<SampleResult> results(scored.size());
  std::size_t workers = std::clamp<std::size_t>(config.workers, 1,
                                                std::max<std::size_t>(scored.size(), 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < scored.size(); ++k) {
      results[k] = score(*scored[k], config);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < scored.size(); k += workers) {
            results[k] = score(*scored[k], config);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (auto& r : results) {
    ++report.n_samples;
    report.plain += r.detail.plain;
    report.cased += r.detail.cased;
    report.full += r.detail.full;
    report.per += r.detail.per;
    if (config.macro_per) {
      const PerCounts& p = r.detail.per;
      if (std::uint64_t den = p.errors() + p.correct) {
        ++report.macro_per_samples;
        report.macro_per_terms[den] += p.errors();
      }
    }
    if (report.f1) {
      ++report.f1->evaluated;
      if (r.zero_wer) {
        ++report.f1->zero_wer;
        report.f1->counts += r.f1;
      }
    }
    if (config.details) report.details.push_back(std::move(r.detail));
  }
  sort_details(report.details);
  report.per.verify();
  return report;
}

CorpusReport merge_reports(const CorpusReport& a, const CorpusReport& b) {
  if (a.config.fingerprint() != b.config.fingerprint()) {
    throw MismatchError("cannot merge reports with different settings: " +
                        a.config.fingerprint() + " vs " +
                        b.config.fingerprint());
  }
  CorpusReport out = a;
  out.n_samples += b.n_samples;
  out.skipped.insert(out.skipped.end(), b.skipped.begin(), b.skipped.end());
  std::sort(out.skipped.begin(), out.skipped.end());
  out.plain += b.plain;
  out.cased += b.cased;
  out.full += b.full;
  out.per += b.per;
  out.macro_per_samples += b.macro_per_samples;
  for (const auto& [den, num] : b.macro_per_terms) {
    out.macro_per_terms[den] += num;
  }
  if (out.f1 && b.f1) {
    out.f1->evaluated += b.f1->evaluated;
    out.f1->zero_wer += b.f1->zero_wer;
    out.f1->counts += b.f1->counts;
  }
  out.details.insert(out.details.end(), b.details.begin(), b.details.end());
  sort_details(out.details);
  return out;
}

std::string render_alignment(std::span<const Token> ref,
                             std::span<const Token> hyp,
                             const AlignmentPath& path) {
  std::string ref_line = "REF: ";
  std::string hyp_line = "HYP: ";
  std::string op_line = "     ";
  for (const auto& op : path.ops) {
    std::string_view r = op.ref_index ? std::string_view(ref[*op.ref_index].surface)
                                      : std::string_view("***");
    std::string_view h = op.hyp_index ? std::string_view(hyp[*op.hyp_index].surface)
                                      : std::string_view("***");
    std::string_view o = to_string(op.kind);
    std::size_t width = std::max({display_width(r), display_width(h), o.size()});
    pad(ref_line, r, width);
    pad(hyp_line, h, width);
    pad(op_line, o, width);
  }
  auto rstrip = [](std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
  };
  rstrip(ref_line);
  rstrip(hyp_line);
  rstrip(op_line);
  return ref_line + "\n" + hyp_line + "\n" + op_line + "\n";
}

std::string alignment_dump(const SampleRecord& sample,
                           const EvalConfig& config) {
  TextOptions text = config.text_options();
  std::vector<Token> ref = text.prepare_tokens(sample.text);
  std::vector<Token> hyp = text.prepare_tokens(sample.pred_text.value_or(""));

  std::string out = "id: " + sample.id + "\n";
  out += "[pc]\n" + render_alignment(ref, hyp, levenshtein_align(ref, hyp));

  AlignmentPath masked;
  PerCounts counts = per_align(ref, hyp, &masked);
  // Relabel punctuation positions by the value check.
  for (auto& op : masked.ops) {
    if (op.kind == EditKind::kCorrect && ref[*op.ref_index].is_punct() &&
        ref[*op.ref_index].surface != hyp[*op.hyp_index].surface) {
      op.kind = EditKind::kSubstitution;
    }
  }
  out += "[punct C=" + std::to_string(counts.correct) +
         " S=" + std::to_string(counts.substitutions) +
         " D=" + std::to_string(counts.deletions) +
         " I=" + std::to_string(counts.insertions) + "]\n";
  out += render_alignment(ref, hyp, masked);
  return out;
}

}  // namespace pcscore
