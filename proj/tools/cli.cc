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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcscore/corpus.h"
#include "pcscore/errors.h"
#include "pcscore/f1.h"
#include "pcscore/manifest.h"
#include "pcscore/percent.h"
#include "pcscore/report_io.h"
#include "pcscore/restore.h"

namespace pcscore::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { kJson, kTsv, kTable };

struct Options {
  std::vector<std::string> puncts;
  bool no_normalize = false;
  std::string format;
  bool strict = false;
  bool macro_per = false;
  unsigned workers = 1;
  double min_duration = 1.0;
  std::size_t max_deviation = 2;

  // eval
  std::string manifest;
  bool f1 = false;
  bool details = false;
  std::string dump_alignments;
  // compare
  std::vector<std::string> manifests;
  // restore
  std::string sources;
  std::string out_manifest;
  std::string decisions;
};

// Thrown for strict-mode violations; carries the diagnostic.
struct StrictnessError : Error {
  using Error::Error;
};

Format resolve_format(const std::string& flag, bool interactive) {
  std::string name = flag;
  if (name.empty()) {
    if (const char* env = std::getenv("PCSCORE_FORMAT")) name = env;
  }
  if (name == "json") return Format::kJson;
  if (name == "tsv") return Format::kTsv;
  if (name == "table") return Format::kTable;
  return interactive ? Format::kTable : Format::kJson;
}

PunctSet punct_set(const Options& o) {
  return o.puncts.empty() ? PunctSet() : PunctSet(o.puncts);
}

EvalConfig eval_config(const Options& o) {
  EvalConfig config;
  config.puncts = punct_set(o);
  config.normalize = !o.no_normalize;
  config.macro_per = o.macro_per;
  config.f1 = o.f1;
  config.details = o.details;
  config.workers = std::max(1u, o.workers);
  return config;
}

void check_hypotheses(const std::vector<SampleRecord>& samples,
                      const std::string& path, const Options& o,
                      std::ostream& err) {
  std::size_t missing = 0;
  for (const auto& s : samples) {
    if (!s.has_hypothesis()) {
      if (missing < 5) {
        err << path << ":" << s.line << ": sample \"" << s.id
            << "\" has no pred_text\n";
      }
      ++missing;
    }
  }
  if (missing == 0) return;
  if (o.strict) {
    throw StrictnessError(std::to_string(missing) +
                          " sample(s) without pred_text in " + path);
  }
  err << "warning: " << missing << " sample(s) without pred_text skipped\n";
}

int run_eval(const Options& o, Format format, std::ostream& out,
             std::ostream& err) {
  std::vector<SampleRecord> samples = load_manifest(o.manifest);
  check_hypotheses(samples, o.manifest, o, err);
  EvalConfig config = eval_config(o);
  CorpusReport report = evaluate_corpus(samples, config);

  if (!o.dump_alignments.empty()) {
    std::ofstream dump(o.dump_alignments);
    if (!dump) throw Error("cannot write " + o.dump_alignments);
    for (const auto& s : samples) {
      if (s.has_hypothesis()) dump << alignment_dump(s, config) << '\n';
    }
  }

  switch (format) {
    case Format::kJson:
      out << report_to_json(report) << '\n';
      break;
    case Format::kTsv:
      out << report_to_tsv(report);
      break;
    case Format::kTable:
      out << report_to_table(report);
      break;
  }
  return kOk;
}

int run_breakdown(const Options& o, Format format, std::ostream& out,
                  std::ostream& err) {
  std::vector<SampleRecord> samples = load_manifest(o.manifest);
  check_hypotheses(samples, o.manifest, o, err);
  CorpusReport report = evaluate_corpus(samples, eval_config(o));
  Breakdown breakdown = report.breakdown();
  switch (format) {
    case Format::kJson:
      out << breakdown_to_json(breakdown) << '\n';
      break;
    case Format::kTsv:
      out << breakdown_to_tsv(breakdown);
      break;
    case Format::kTable:
      out << breakdown_to_table(breakdown);
      break;
  }
  return kOk;
}

json prf_json(const PrfScores& s) {
  return json{{"tp", s.tp},         {"fp", s.fp},
              {"fn", s.fn},         {"precision", s.precision()},
              {"recall", s.recall()}, {"f1", s.f1()}};
}

int run_compare(const Options& o, Format format, std::ostream& out,
                std::ostream& err) {
  if (o.manifests.size() < 2) throw CLI::ValidationError("compare needs at least two manifests");
  TextOptions text{punct_set(o), !o.no_normalize};

  std::vector<std::vector<SampleRecord>> systems;
  for (const auto& path : o.manifests) {
    std::vector<SampleRecord> samples = load_manifest(path);
    check_hypotheses(samples, path, o, err);
    systems.push_back(std::move(samples));
  }
  // Re-order every system to the first manifest's id order.
  const auto& base = systems.front();
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < base.size(); ++i) position[base[i].id] = i;
  for (std::size_t k = 1; k < systems.size(); ++k) {
    if (systems[k].size() != base.size()) {
      throw MismatchError(o.manifests[k] + " has " +
                          std::to_string(systems[k].size()) + " samples, " +
                          o.manifests[0] + " has " +
                          std::to_string(base.size()));
    }
    std::vector<SampleRecord> ordered(base.size());
    for (auto& s : systems[k]) {
      auto it = position.find(s.id);
      if (it == position.end()) {
        throw MismatchError("id \"" + s.id + "\" of " + o.manifests[k] +
                            " is not in " + o.manifests[0]);
      }
      if (s.text != base[it->second].text) {
        throw MismatchError("reference text for id \"" + s.id +
                            "\" differs between manifests");
      }
      ordered[it->second] = std::move(s);
    }
    systems[k] = std::move(ordered);
  }

  std::vector<SubsetSelection> subsets;
  for (const auto& s : systems) subsets.push_back(zero_wer_subset(s, text));
  SubsetSelection common = intersection(subsets);

  std::vector<std::optional<F1Counts>> scores;
  for (const auto& s : systems) {
    if (common.size() == 0) {
      scores.emplace_back();
    } else {
      scores.emplace_back(f1_scores(select(s, common), text));
    }
  }

  auto name_of = [&](std::size_t k) {
    return fs::path(o.manifests[k]).stem().string();
  };

  if (format == Format::kJson) {
    json j;
    j["total"] = base.size();
    j["systems"] = json::array();
    for (std::size_t k = 0; k < systems.size(); ++k) {
      json sys{{"name", name_of(k)},
               {"manifest", o.manifests[k]},
               {"zero_wer", subsets[k].size()},
               {"zero_wer_fraction", subsets[k].fraction()},
               {"zero_wer_percent",
                format_count_percent(subsets[k].size(), subsets[k].total)}};
      if (scores[k]) {
        sys["capitalization"] = prf_json(scores[k]->capitalization);
        sys["punctuation"] = prf_json(scores[k]->punctuation);
        json by_mark = json::object();
        for (const auto& [m, s] : scores[k]->punctuation_by_mark) {
          by_mark[m] = prf_json(s);
        }
        sys["punctuation_by_mark"] = by_mark;
      }
      j["systems"].push_back(sys);
    }
    j["intersection"] = {{"size", common.size()},
                         {"fraction", common.fraction()},
                         {"percent", format_count_percent(common.size(), common.total)}};
    j["scores_computable"] = common.size() > 0;
    out << j.dump() << '\n';
    return kOk;
  }

  std::ostringstream table;
  const char* sep = format == Format::kTsv ? "\t" : "  ";
  table << "system" << sep << "total" << sep << "wer0" << sep << "wer0_pct"
        << sep << "intersection" << sep << "intersection_pct" << sep
        << "cap_f1" << sep << "cap_p" << sep << "cap_r" << sep << "punct_f1"
        << sep << "punct_p" << sep << "punct_r\n";
  for (std::size_t k = 0; k < systems.size(); ++k) {
    table << name_of(k) << sep << base.size() << sep << subsets[k].size()
          << sep << format_count_percent(subsets[k].size(), subsets[k].total) << sep
          << common.size() << sep << format_count_percent(common.size(), common.total);
    if (scores[k]) {
      const auto& c = *scores[k];
      for (const PrfScores* s : {&c.capitalization, &c.punctuation}) {
        table << sep << format_percent(s->f1()) << sep
              << format_percent(s->precision()) << sep
              << format_percent(s->recall());
      }
    } else {
      for (int i = 0; i < 6; ++i) table << sep << "n/a";
    }
    table << '\n';
  }
  if (common.size() == 0 && format == Format::kTable) {
    table << "F1 scores not computable: the zero-WER intersection is empty\n";
  }
  out << table.str();
  return kOk;
}

std::map<std::string, SourceText> load_sources(const std::string& dir) {
  std::map<std::string, SourceText> sources;
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    sources.emplace(path.filename().string(), SourceText(buf.str()));
  }
  if (sources.empty()) throw Error("no source documents in " + dir);
  return sources;
}

int run_restore(const Options& o, Format format, std::ostream& out,
                std::ostream& err) {
  std::vector<SampleRecord> samples = load_manifest(o.manifest);
  std::map<std::string, SourceText> sources = load_sources(o.sources);
  // Accept "book" for "book.txt".
  for (auto& s : samples) {
    if (auto name = s.extra_string("source");
        name && !sources.contains(*name) && sources.contains(*name + ".txt")) {
      for (auto& [k, v] : s.extra) {
        if (k == "source") v = json(*name + ".txt").dump();
      }
    }
  }
  RestoreConfig config;
  config.puncts = punct_set(o);
  config.max_deviation = o.max_deviation;
  config.min_duration = o.min_duration;
  RestoreOutcome outcome = restore_manifest(samples, sources, config);

  std::ofstream manifest_out(o.out_manifest, std::ios::binary);
  if (!manifest_out) throw Error("cannot write " + o.out_manifest);
  write_manifest(manifest_out, outcome.kept);
  if (!o.decisions.empty()) {
    std::ofstream decisions_out(o.decisions, std::ios::binary);
    if (!decisions_out) throw Error("cannot write " + o.decisions);
    decisions_out << decisions_to_tsv(outcome.decisions);
  }
  std::size_t unchecked = 0;
  for (const auto& d : outcome.decisions) unchecked += !d.decision.duration_checked;
  if (unchecked) {
    err << "warning: " << unchecked
        << " sample(s) without duration; duration rule skipped and retention "
           "not computed\n";
  }

  switch (format) {
    case Format::kJson: {
      json rows = json::array();
      for (const auto& r : outcome.retention) {
        rows.push_back({{"group", r.group},
                        {"original_samples", r.original_samples},
                        {"kept_samples", r.kept_samples},
                        {"original_hours", r.original_hours()},
                        {"kept_hours", r.kept_hours()},
                        {"retention", r.retention()},
                        {"retention_percent", format_percent(r.retention())}});
      }
      json reasons = json::object();
      for (const auto& d : outcome.decisions) {
        std::string key = d.decision.kept() ? "kept" : std::string(to_string(*d.decision.reason));
        reasons[key] = reasons.value(key, 0) + 1;
      }
      out << json{{"samples", outcome.decisions.size()},
                  {"kept", outcome.kept.size()},
                  {"verdicts", reasons},
                  {"retention", rows}}
                 .dump()
          << '\n';
      break;
    }
    case Format::kTsv:
      out << "group\toriginal_hours\tkept_hours\tretention\n";
      for (const auto& r : outcome.retention) {
        out << r.group << '\t' << r.original_hours() << '\t' << r.kept_hours()
            << '\t' << format_percent(r.retention()) << '\n';
      }
      break;
    case Format::kTable:
      out << "kept " << outcome.kept.size() << " of " << outcome.decisions.size()
          << " samples\n";
      if (!outcome.retention.empty()) out << retention_to_table(outcome.retention);
      break;
  }
  return kOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--punct", o.puncts,
                  "Punctuation mark to score (repeatable; default . , ?)")
      ->allow_extra_args(false);
  cmd->add_flag("--no-normalize", o.no_normalize,
                "Score texts as given, without splitting off punctuation");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "table"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err, bool interactive) {
  Options o;
  CLI::App app{"Punctuation- and capitalization-aware ASR scoring"};
  app.name("pcscore");
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "Score a manifest: WER, WER C, WER PC and PER");
  add_common(eval, o);
  eval->add_option("manifest", o.manifest, "JSON Lines manifest")->required();
  eval->add_flag("--strict", o.strict, "Fail if any sample lacks pred_text");
  eval->add_flag("--macro-per", o.macro_per, "Also report mean per-sample PER");
  eval->add_option("--workers", o.workers, "Scoring threads")->check(CLI::PositiveNumber);
  eval->add_flag("--f1", o.f1, "Add zero-WER capitalization/punctuation F1");
  eval->add_flag("--details", o.details, "Include per-sample rows (json)");
  eval->add_option("--dump-alignments", o.dump_alignments, "Write aligned text to FILE");

  CLI::App* breakdown = app.add_subcommand("breakdown", "Per-mark punctuation error table");
  add_common(breakdown, o);
  breakdown->add_option("manifest", o.manifest, "JSON Lines manifest")->required();
  breakdown->add_flag("--strict", o.strict, "Fail if any sample lacks pred_text");
  breakdown->add_option("--workers", o.workers, "Scoring threads")->check(CLI::PositiveNumber);

  CLI::App* compare = app.add_subcommand("compare", "Zero-WER subsets, their intersection and F1 on it");
  add_common(compare, o);
  compare->add_option("manifests", o.manifests, "Two or more system manifests")
      ->required()
      ->expected(2, -1);
  compare->add_flag("--strict", o.strict, "Fail if any sample lacks pred_text");

  CLI::App* restore = app.add_subcommand("restore", "Restore case and punctuation from source documents");
  add_common(restore, o);
  restore->add_option("manifest", o.manifest, "Transcript manifest")->required();
  restore->add_option("--sources", o.sources, "Directory of UTF-8 source documents")->required();
  restore->add_option("--out", o.out_manifest, "Restored manifest to write")->required();
  restore->add_option("--decisions", o.decisions, "Per-sample decisions (TSV) to write");
  restore->add_option("--min-duration", o.min_duration, "Drop samples shorter than this (s)")
      ->check(CLI::NonNegativeNumber);
  restore->add_option("--max-deviation", o.max_deviation, "Word edits tolerated against the source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Format format = resolve_format(o.format, interactive);
    if (*eval) return run_eval(o, format, out, err);
    if (*breakdown) return run_breakdown(o, format, out, err);
    if (*compare) return run_compare(o, format, out, err);
    if (*restore) return run_restore(o, format, out, err);
  } catch (const std::invalid_argument& e) {
    err << "pcscore: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    err << "pcscore: " << e.what() << '\n';
    return kUsageError;
  } catch (const StrictnessError& e) {
    err << "pcscore: " << e.what() << '\n';
    return kStrictnessViolation;
  } catch (const std::exception& e) {
    err << "pcscore: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace pcscore::cli
