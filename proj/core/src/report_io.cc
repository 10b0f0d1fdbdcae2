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

#include "pcscore/report_io.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "pcscore/errors.h"
#include "pcscore/percent.h"

namespace pcscore {

using nlohmann::json;

namespace {

json rate_json(std::optional<double> rate) {
  return rate ? json(*rate) : json(nullptr);
}

json counts_json(const AlignmentCounts& c) {
  return json{{"substitutions", c.substitutions},
              {"deletions", c.deletions},
              {"insertions", c.insertions},
              {"correct", c.correct},
              {"ref_length", c.ref_length},
              {"rate", rate_json(c.try_rate())}};
}

AlignmentCounts counts_from(const json& j) {
  AlignmentCounts c;
  c.substitutions = j.at("substitutions").get<std::uint64_t>();
  c.deletions = j.at("deletions").get<std::uint64_t>();
  c.insertions = j.at("insertions").get<std::uint64_t>();
  c.correct = j.at("correct").get<std::uint64_t>();
  c.ref_length = j.at("ref_length").get<std::uint64_t>();
  return c;
}

json per_json(const PerCounts& p) {
  PerRate rate = punctuation_error_rate(p);
  return json{{"correct", p.correct},
              {"substitutions", p.substitutions},
              {"deletions", p.deletions},
              {"insertions", p.insertions},
              {"ref_marks", p.ref_marks},
              {"hyp_marks", p.hyp_marks},
              {"substitution_matrix", p.substitution_matrix},
              {"deletions_by_mark", p.deletions_by_mark},
              {"insertions_by_mark", p.insertions_by_mark},
              {"correct_by_mark", p.correct_by_mark},
              {"rate", rate.value},
              {"punctuation_free", rate.punctuation_free}};
}

PerCounts per_from(const json& j) {
  PerCounts p;
  p.correct = j.at("correct").get<std::uint64_t>();
  p.substitutions = j.at("substitutions").get<std::uint64_t>();
  p.deletions = j.at("deletions").get<std::uint64_t>();
  p.insertions = j.at("insertions").get<std::uint64_t>();
  p.ref_marks = j.at("ref_marks").get<std::uint64_t>();
  p.hyp_marks = j.at("hyp_marks").get<std::uint64_t>();
  j.at("substitution_matrix").get_to(p.substitution_matrix);
  j.at("deletions_by_mark").get_to(p.deletions_by_mark);
  j.at("insertions_by_mark").get_to(p.insertions_by_mark);
  j.at("correct_by_mark").get_to(p.correct_by_mark);
  p.verify();
  return p;
}

json prf_json(const PrfScores& s) {
  return json{{"tp", s.tp},
              {"fp", s.fp},
              {"fn", s.fn},
              {"precision", s.precision()},
              {"recall", s.recall()},
              {"f1", s.f1()},
              {"precision_defined", s.precision_defined()},
              {"recall_defined", s.recall_defined()}};
}

PrfScores prf_from(const json& j) {
  return PrfScores{j.at("tp").get<std::uint64_t>(),
                   j.at("fp").get<std::uint64_t>(),
                   j.at("fn").get<std::uint64_t>()};
}

json breakdown_json(const Breakdown& b) {
  json columns = json::array();
  for (const auto& c : b.columns) {
    json subs_to = json::object();
    for (const auto& [to, n] : c.substitutions_to) {
      subs_to[to] = {{"count", n}, {"fraction", c.fraction(n)}};
    }
    columns.push_back({{"mark", c.mark},
                       {"total", c.total()},
                       {"correct", {{"count", c.correct},
                                    {"fraction", c.fraction(c.correct)}}},
                       {"deletions", {{"count", c.deletions},
                                      {"fraction", c.fraction(c.deletions)}}},
                       {"insertions", {{"count", c.insertions},
                                       {"fraction", c.fraction(c.insertions)}}},
                       {"substitutions",
                        {{"count", c.substitutions},
                         {"fraction", c.fraction(c.substitutions)}}},
                       {"substitutions_to", subs_to},
                       {"per", c.per()}});
  }
  return json{{"columns", columns}, {"unseen", b.unseen}};
}

json report_json(const CorpusReport& r) {
  json j;
  j["config"] = {{"puncts", r.config.puncts.marks()},
                 {"normalize", r.config.normalize},
                 {"f1", r.config.f1},
                 {"macro_per", r.config.macro_per},
                 {"details", r.config.details}};
  j["n_samples"] = r.n_samples;
  j["skipped"] = r.skipped;
  j["views"] = {{"plain", counts_json(r.plain)},
                {"c", counts_json(r.cased)},
                {"pc", counts_json(r.full)}};
  j["rates"] = {{"wer", rate_json(r.wer())},
                {"wer_c", rate_json(r.wer_c())},
                {"wer_pc", rate_json(r.wer_pc())},
                {"per", r.per_rate().value}};
  j["per"] = per_json(r.per);
  j["breakdown"] = breakdown_json(r.breakdown());
  if (r.config.macro_per) {
    json terms = json::array();
    for (const auto& [den, num] : r.macro_per_terms) terms.push_back({den, num});
    j["macro_per"] = {{"samples", r.macro_per_samples},
                      {"terms", terms},
                      {"rate", rate_json(r.macro_per_rate())}};
  }
  if (r.f1) {
    json by_mark = json::object();
    for (const auto& [m, s] : r.f1->counts.punctuation_by_mark) {
      by_mark[m] = prf_json(s);
    }
    j["f1"] = {{"evaluated", r.f1->evaluated},
               {"zero_wer", r.f1->zero_wer},
               {"zero_wer_fraction",
                r.f1->evaluated ? static_cast<double>(r.f1->zero_wer) /
                                      static_cast<double>(r.f1->evaluated)
                                : 0.0},
               {"capitalization", prf_json(r.f1->counts.capitalization)},
               {"punctuation", prf_json(r.f1->counts.punctuation)},
               {"punctuation_by_mark", by_mark},
               {"punctuation_macro_f1", r.f1->counts.punctuation_macro_f1()}};
  }
  if (r.config.details) {
    json rows = json::array();
    for (const auto& d : r.details) {
      rows.push_back({{"id", d.id},
                      {"plain", counts_json(d.plain)},
                      {"c", counts_json(d.cased)},
                      {"pc", counts_json(d.full)},
                      {"per", per_json(d.per)}});
    }
    j["details"] = rows;
  }
  return j;
}

std::string fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string pct(std::optional<double> rate) {
  return rate ? format_percent(*rate) + "%" : "n/a";
}

}  // namespace

std::string report_to_json(const CorpusReport& report) {
  return report_json(report).dump();
}

CorpusReport report_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  try {
    CorpusReport r;
    const json& cfg = j.at("config");
    r.config.puncts = PunctSet(cfg.at("puncts").get<std::vector<std::string>>());
    r.config.normalize = cfg.at("normalize").get<bool>();
    r.config.f1 = cfg.at("f1").get<bool>();
    r.config.macro_per = cfg.at("macro_per").get<bool>();
    r.config.details = cfg.at("details").get<bool>();
    r.n_samples = j.at("n_samples").get<std::uint64_t>();
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
    r.plain = counts_from(j.at("views").at("plain"));
    r.cased = counts_from(j.at("views").at("c"));
    r.full = counts_from(j.at("views").at("pc"));
    r.per = per_from(j.at("per"));
    if (r.config.macro_per) {
      r.macro_per_samples = j.at("macro_per").at("samples").get<std::uint64_t>();
      for (const auto& t : j.at("macro_per").at("terms")) {
        r.macro_per_terms[t.at(0).get<std::uint64_t>()] = t.at(1).get<std::uint64_t>();
      }
    }
    if (r.config.f1) {
      const json& f = j.at("f1");
      F1Section s;
      s.evaluated = f.at("evaluated").get<std::uint64_t>();
      s.zero_wer = f.at("zero_wer").get<std::uint64_t>();
      s.counts.capitalization = prf_from(f.at("capitalization"));
      s.counts.punctuation = prf_from(f.at("punctuation"));
      for (const auto& [m, v] : f.at("punctuation_by_mark").items()) {
        s.counts.punctuation_by_mark[m] = prf_from(v);
      }
      r.f1 = s;
    }
    if (r.config.details) {
      for (const auto& row : j.at("details")) {
        r.details.push_back(SampleDetail{row.at("id").get<std::string>(),
                                         counts_from(row.at("plain")),
                                         counts_from(row.at("c")),
                                         counts_from(row.at("pc")),
                                         per_from(row.at("per"))});
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("invalid report: ") + e.what());
  }
}

std::string report_to_tsv(const CorpusReport& r) {
  std::ostringstream out;
  auto row = [&](std::string_view name, std::optional<double> rate,
                 std::uint64_t errors, std::uint64_t total) {
    out << name << '\t' << (rate ? fixed(*rate) : "nan") << '\t' << errors
        << '\t' << total << '\n';
  };
  out << "metric\trate\terrors\ttotal\n";
  row("wer", r.wer(), r.plain.errors(), r.plain.ref_length);
  row("wer_c", r.wer_c(), r.cased.errors(), r.cased.ref_length);
  row("wer_pc", r.wer_pc(), r.full.errors(), r.full.ref_length);
  row("per", r.per_rate().value, r.per.errors(), r.per.errors() + r.per.correct);
  if (auto macro = r.macro_per_rate()) {
    row("macro_per", macro, 0, r.macro_per_samples);
  }
  if (r.f1) {
    const auto& c = r.f1->counts;
    out << "zero_wer\t" << fixed(r.f1->evaluated ? static_cast<double>(r.f1->zero_wer) / r.f1->evaluated : 0.0)
        << '\t' << r.f1->zero_wer << '\t' << r.f1->evaluated << '\n';
    out << "cap_f1\t" << fixed(c.capitalization.f1()) << "\t-\t-\n";
    out << "punct_f1\t" << fixed(c.punctuation.f1()) << "\t-\t-\n";
  }
  return out.str();
}

std::string report_to_table(const CorpusReport& r) {
  std::ostringstream out;
  out << "samples      " << r.n_samples;
  if (!r.skipped.empty()) out << " (" << r.skipped.size() << " skipped)";
  out << '\n';
  auto line = [&](std::string_view name, const AlignmentCounts& c) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%-12s %8s  (S=%llu D=%llu I=%llu / N=%llu)\n",
                  std::string(name).c_str(), pct(c.try_rate()).c_str(),
                  static_cast<unsigned long long>(c.substitutions),
                  static_cast<unsigned long long>(c.deletions),
                  static_cast<unsigned long long>(c.insertions),
                  static_cast<unsigned long long>(c.ref_length));
    out << buf;
  };
  line("WER", r.plain);
  line("WER C", r.cased);
  line("WER PC", r.full);
  {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%-12s %8s  (S=%llu D=%llu I=%llu C=%llu)\n", "PER",
                  pct(r.per_rate().value).c_str(),
                  static_cast<unsigned long long>(r.per.substitutions),
                  static_cast<unsigned long long>(r.per.deletions),
                  static_cast<unsigned long long>(r.per.insertions),
                  static_cast<unsigned long long>(r.per.correct));
    out << buf;
  }
  if (r.config.macro_per) {
    out << "PER (macro)  " << pct(r.macro_per_rate()) << '\n';
  }
  if (r.f1) {
    const auto& c = r.f1->counts;
    out << "\nzero-WER samples " << r.f1->zero_wer << " ("
        << format_count_percent(r.f1->zero_wer, r.f1->evaluated) << "%)\n";
    auto prf = [&](std::string_view name, const PrfScores& s) {
      out << name << "  F1 " << format_percent(s.f1()) << "  P "
          << format_percent(s.precision()) << "  R "
          << format_percent(s.recall()) << '\n';
    };
    prf("Capitalization", c.capitalization);
    prf("Punctuation   ", c.punctuation);
  }
  Breakdown b = r.breakdown();
  if (!b.columns.empty()) out << '\n' << breakdown_to_table(b);
  return out.str();
}

std::string breakdown_to_table(const Breakdown& b) {
  std::ostringstream out;
  std::vector<std::string> header{"Metrics"};
  for (const auto& c : b.columns) header.push_back("'" + c.mark + "'");
  std::vector<std::vector<std::string>> rows;
  auto add = [&](std::string name, auto value) {
    std::vector<std::string> row{std::move(name)};
    for (const auto& c : b.columns) row.push_back(value(c));
    rows.push_back(std::move(row));
  };
  auto pct_of = [](const BreakdownColumn& c, std::uint64_t n) {
    return format_percent(c.fraction(n)) + "%";
  };
  add("Correct", [&](const auto& c) { return pct_of(c, c.correct); });
  add("Deletions", [&](const auto& c) { return pct_of(c, c.deletions); });
  add("Insertions", [&](const auto& c) { return pct_of(c, c.insertions); });
  add("Substitutions (total)",
      [&](const auto& c) { return pct_of(c, c.substitutions); });
  for (const auto& target : b.columns) {
    add("Substitutions (to '" + target.mark + "')", [&](const auto& c) {
      if (c.mark == target.mark) return std::string("-");
      auto it = c.substitutions_to.find(target.mark);
      return pct_of(c, it == c.substitutions_to.end() ? 0 : it->second);
    });
  }
  add("PER", [&](const auto& c) { return format_percent(c.per()) + "%"; });

  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      width[k] = std::max(width[k], row[k].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k == 0) {
        out << row[k] << std::string(width[k] - row[k].size(), ' ');
      } else {
        out << "  " << std::string(width[k] - row[k].size(), ' ') << row[k];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (!b.unseen.empty()) {
    out << "unseen:";
    for (const auto& m : b.unseen) out << " '" << m << "'";
    out << '\n';
  }
  return out.str();
}

std::string breakdown_to_json(const Breakdown& breakdown) {
  return breakdown_json(breakdown).dump();
}

std::string breakdown_to_tsv(const Breakdown& breakdown) {
  std::ostringstream out;
  out << "mark\ttotal\tcorrect\tdeletions\tinsertions\tsubstitutions\tper\n";
  for (const auto& c : breakdown.columns) {
    out << c.mark << '\t' << c.total() << '\t' << fixed(c.fraction(c.correct))
        << '\t' << fixed(c.fraction(c.deletions)) << '\t'
        << fixed(c.fraction(c.insertions)) << '\t'
        << fixed(c.fraction(c.substitutions)) << '\t' << fixed(c.per()) << '\n';
  }
  return out.str();
}

}  // namespace pcscore
