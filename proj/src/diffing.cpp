// Copyright 2026 The sentivec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sentivec/diffing.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sentivec/error.hpp"
#include "sentivec/io.hpp"

namespace sentivec::diffing {
namespace {

const std::string kModule = "diffing";

using sentiment::Label;

std::optional<Status> parse_status(std::string_view s) {
  for (auto st : {Status::agree, Status::flip, Status::uncomparable}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::flip:
      return "flip";
    case Status::uncomparable:
      return "uncomparable";
    case Status::agree:
      break;
  }
  return "agree";
}

std::size_t FlipReport::count(Status s) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const FlipRow& r) { return r.status == s; }));
}

Status classify_labels(const std::vector<Label>& labels) noexcept {
  if (std::any_of(labels.begin(), labels.end(), [](Label l) { return l == Label::unknown; })) {
    return Status::uncomparable;
  }
  if (std::adjacent_find(labels.begin(), labels.end(), std::not_equal_to<>()) != labels.end()) {
    return Status::flip;
  }
  return Status::agree;
}

FlipReport compare_models(const std::vector<ModelView>& models,
                          const std::vector<std::string>& words, const CompareOptions& options) {
  if (models.size() < 2) throw Error(kModule, "compare_models needs at least two models");
  FlipReport report;
  std::set<std::string> names;
  for (const auto& m : models) {
    if (!m.model || !m.scorer)
      throw Error(kModule, "model '" + m.name + "' has no model or scorer");
    if (!names.insert(m.name).second) throw Error(kModule, "duplicate model name '" + m.name + "'");
    report.model_names.push_back(m.name);
  }
  const std::set<std::string> unique_words(words.begin(), words.end());
  for (const auto& w : unique_words) {
    FlipRow row;
    row.word = w;
    for (const auto& m : models) {
      const auto s = sentiment::score(*m.scorer, *m.model, w);
      Label l = s.label;
      if (l != Label::unknown && options.min_margin > 0.0 && s.margin() < options.min_margin) {
        l = Label::tie;
      }
      row.labels.push_back(l);
    }
    row.status = classify_labels(row.labels);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_report(const FlipReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::tsv) {
    os << "word";
    for (const auto& n : report.model_names) os << '\t' << n;
    os << "\tstatus\n";
    for (const auto& r : report.rows) {
      os << r.word;
      for (auto l : r.labels) os << '\t' << sentiment::to_string(l);
      os << '\t' << to_string(r.status) << '\n';
    }
  } else {
    for (const auto& r : report.rows) {
      nlohmann::ordered_json j;
      j["word"] = r.word;
      nlohmann::ordered_json labels = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < r.labels.size(); ++i) {
        labels[report.model_names[i]] = sentiment::to_string(r.labels[i]);
      }
      j["labels"] = std::move(labels);
      j["status"] = to_string(r.status);
      os << j.dump() << '\n';
    }
  }
  return std::move(os).str();
}

void emit_report(const FlipReport& report, const std::string& path, ReportFormat format) {
  const std::string body = format_report(report, format);
  io::write_atomic(path, [&](std::ostream& os) { os << body; }, kModule);
}

FlipReport parse_report_tsv(std::string_view text) {
  const auto ls = io::lines(text);
  if (ls.empty()) throw Error(kModule, "flip report is empty (missing header)");
  const auto header = io::split_nonempty(ls[0], '\t');
  if (header.size() < 2 || header.front() != "word" || header.back() != "status") {
    throw Error(kModule, "flip report header must be 'word, <models...>, status'");
  }
  FlipReport report;
  for (std::size_t i = 1; i + 1 < header.size(); ++i) report.model_names.emplace_back(header[i]);
  for (std::size_t li = 1; li < ls.size(); ++li) {
    if (ls[li].empty()) continue;
    const auto fields = io::split_nonempty(ls[li], '\t');
    if (fields.size() != header.size()) {
      throw Error(kModule, "flip report line " + std::to_string(li + 1) + " has " +
                               std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(header.size()));
    }
    FlipRow row;
    row.word = std::string(fields.front());
    for (std::size_t i = 1; i + 1 < fields.size(); ++i) {
      const auto l = sentiment::parse_label(fields[i]);
      if (!l) throw Error(kModule, "bad label at line " + std::to_string(li + 1));
      row.labels.push_back(*l);
    }
    const auto st = parse_status(fields.back());
    if (!st) throw Error(kModule, "bad status at line " + std::to_string(li + 1));
    row.status = *st;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_projections(const std::string& path,
                       const std::vector<std::pair<std::string, Projection>>& projections) {
  io::write_atomic(
      path,
      [&](std::ostream& os) {
        os << "model\tword\tx\ty\n";
        for (const auto& [name, proj] : projections) {
          for (const auto& [word, xy] : proj.coords) {
            os << name << '\t' << word << '\t' << io::format_shortest(xy.first) << '\t'
               << io::format_shortest(xy.second) << '\n';
          }
        }
      },
      kModule);
}

}  // namespace sentivec::diffing
