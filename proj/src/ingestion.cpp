/*
 * Copyright 2026 The seqaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "seqaug/ingestion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include <json.hpp>

namespace seqaug {
namespace {

std::vector<std::string_view> split_on(std::string_view line, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::size_t line_no, std::string_view line,
                            std::string_view why) {
  throw Error("line " + std::to_string(line_no) + ": " + std::string(why) +
              ": '" + std::string(line.substr(0, 120)) + "'");
}

std::int64_t parse_timestamp(std::string_view field, std::size_t line_no,
                             std::string_view line) {
  std::int64_t ts = 0;
  const auto res = std::from_chars(field.begin(), field.end(), ts);
  if (res.ec != std::errc{} || res.ptr != field.end())
    malformed(line_no, line, "timestamp is not an integer");
  if (ts < 0) malformed(line_no, line, "timestamp is negative");
  return ts;
}

class Interner {
 public:
  UserId user(std::string_view label) {
    return intern(label, ids_.user_ids, ids_.user_labels);
  }
  ItemId item(std::string_view label) {
    return intern(label, ids_.item_ids, ids_.item_labels);
  }
  IdMaps take() { return std::move(ids_); }

 private:
  static std::uint32_t intern(std::string_view label,
                              std::unordered_map<std::string, std::uint32_t>& map,
                              std::vector<std::string>& labels) {
    auto [it, inserted] = map.try_emplace(std::string(label),
                                          static_cast<std::uint32_t>(labels.size() + 1));
    if (inserted) labels.emplace_back(it->first);
    return it->second;
  }

  IdMaps ids_;
};

void parse_delimited(std::istream& source, std::string_view sep, bool has_header,
                     ParsedInteractions& out, Interner& interner) {
  std::string line;
  std::size_t line_no = 0;
  int user_col = 0, item_col = 1, ts_col = 2;
  bool header_seen = false;

  while (std::getline(source, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty()) continue;

    const auto fields = split_on(sv, sep);

    if (has_header && !header_seen) {
      header_seen = true;
      user_col = item_col = ts_col = -1;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string_view name = trim(fields[i]);
        if (name == "user") user_col = static_cast<int>(i);
        else if (name == "item") item_col = static_cast<int>(i);
        else if (name == "timestamp") ts_col = static_cast<int>(i);
      }
      if (user_col < 0 || item_col < 0 || ts_col < 0)
        malformed(line_no, sv, "header must name user, item and timestamp columns");
      continue;
    }

    // movielens-dat rows carry user::item::rating::timestamp; the rating is
    // read and discarded. A three-field row (no rating) is also accepted.
    if (!has_header) {
      if (fields.size() == 4) ts_col = 3;
      else if (fields.size() == 3) ts_col = 2;
      else malformed(line_no, sv, "expected 3 or 4 '::'-separated fields");
    } else if (fields.size() <= static_cast<std::size_t>(std::max({user_col, item_col, ts_col}))) {
      malformed(line_no, sv, "record has fewer fields than the header");
    }

    const std::string_view user_f = trim(fields[static_cast<std::size_t>(user_col)]);
    const std::string_view item_f = trim(fields[static_cast<std::size_t>(item_col)]);
    const std::string_view ts_f = trim(fields[static_cast<std::size_t>(ts_col)]);
    if (user_f.empty() || item_f.empty())
      malformed(line_no, sv, "empty user or item field");

    out.interactions.push_back(Interaction{interner.user(user_f), interner.item(item_f),
                                           parse_timestamp(ts_f, line_no, sv)});
  }
}

void parse_json_lines(std::istream& source, ParsedInteractions& out, Interner& interner) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const std::string_view sv = trim(line);
    if (sv.empty()) continue;

    nlohmann::json record = nlohmann::json::parse(sv, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      malformed(line_no, sv, "not a JSON object");
    if (!record.contains("user") || !record.contains("item") || !record.contains("timestamp"))
      malformed(line_no, sv, "missing user, item or timestamp key");

    const auto label_of = [&](const nlohmann::json& v) -> std::string {
      if (v.is_string()) return v.get<std::string>();
      if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
      malformed(line_no, sv, "user/item must be a string or integer");
    };
    const nlohmann::json& ts = record["timestamp"];
    if (!ts.is_number_integer())
      malformed(line_no, sv, "timestamp is not an integer");
    const std::int64_t t = ts.get<std::int64_t>();
    if (t < 0) malformed(line_no, sv, "timestamp is negative");

    out.interactions.push_back(Interaction{interner.user(label_of(record["user"])),
                                           interner.item(label_of(record["item"])), t});
  }
}

double round2(double x) { return std::llround(x * 100.0) / 100.0; }

}  // namespace

SourceFormat parse_source_format(std::string_view name) {
  if (name == "movielens-dat") return SourceFormat::movielens_dat;
  if (name == "csv") return SourceFormat::csv;
  if (name == "tsv") return SourceFormat::tsv;
  if (name == "json-lines" || name == "jsonl") return SourceFormat::json_lines;
  throw Error("unknown source format '" + std::string(name) +
              "' (expected movielens-dat, csv, tsv or json-lines)");
}

std::string_view source_format_name(SourceFormat format) {
  switch (format) {
    case SourceFormat::movielens_dat: return "movielens-dat";
    case SourceFormat::csv: return "csv";
    case SourceFormat::tsv: return "tsv";
    case SourceFormat::json_lines: return "json-lines";
  }
  throw Error("invalid source format value");
}

ParsedInteractions parse_interactions(std::istream& source, SourceFormat format) {
  ParsedInteractions out;
  Interner interner;
  switch (format) {
    case SourceFormat::movielens_dat:
      parse_delimited(source, "::", /*has_header=*/false, out, interner);
      break;
    case SourceFormat::csv:
      parse_delimited(source, ",", /*has_header=*/true, out, interner);
      break;
    case SourceFormat::tsv:
      parse_delimited(source, "\t", /*has_header=*/true, out, interner);
      break;
    case SourceFormat::json_lines:
      parse_json_lines(source, out, interner);
      break;
  }
  if (out.interactions.empty()) throw Error("no records");
  out.ids = interner.take();
  return out;
}

DatasetStats dataset_stats(const std::vector<Interaction>& interactions) {
  if (interactions.empty()) throw Error("dataset_stats: empty interaction list");
  std::set<UserId> users;
  std::set<ItemId> items;
  for (const Interaction& x : interactions) {
    users.insert(x.user);
    items.insert(x.item);
  }
  DatasetStats s;
  s.num_users = users.size();
  s.num_items = items.size();
  s.num_interactions = interactions.size();
  s.avg_sequence_length =
      round2(static_cast<double>(s.num_interactions) / static_cast<double>(s.num_users));
  s.sparsity_percent =
      round2(100.0 * (1.0 - static_cast<double>(s.num_interactions) /
                                (static_cast<double>(s.num_users) *
                                 static_cast<double>(s.num_items))));
  return s;
}

DatasetStats dataset_stats(const std::map<UserId, std::vector<ItemId>>& sequences) {
  if (sequences.empty()) throw Error("dataset_stats: empty sequence map");
  std::set<ItemId> items;
  std::size_t interactions = 0;
  for (const auto& [user, seq] : sequences) {
    interactions += seq.size();
    items.insert(seq.begin(), seq.end());
  }
  DatasetStats s;
  s.num_users = sequences.size();
  s.num_items = items.size();
  s.num_interactions = interactions;
  s.avg_sequence_length =
      round2(static_cast<double>(interactions) / static_cast<double>(s.num_users));
  s.sparsity_percent =
      round2(100.0 * (1.0 - static_cast<double>(interactions) /
                                (static_cast<double>(s.num_users) *
                                 static_cast<double>(s.num_items))));
  return s;
}

}  // namespace seqaug
