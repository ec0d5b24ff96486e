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
#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seqaug/common.hpp"

namespace seqaug {

// One implicit-feedback event. Rating payloads are discarded at parse time.
struct Interaction {
  UserId user = 0;
  ItemId item = 0;
  std::int64_t timestamp = 0;

  bool operator==(const Interaction&) const = default;
};

// Bijective raw-label <-> dense-id maps. Dense ids are contiguous from 1 in
// first-appearance order; labels[id - 1] recovers the raw label.
struct IdMaps {
  std::vector<std::string> user_labels;
  std::vector<std::string> item_labels;
  std::unordered_map<std::string, UserId> user_ids;
  std::unordered_map<std::string, ItemId> item_ids;
};

enum class SourceFormat { movielens_dat, csv, tsv, json_lines };

SourceFormat parse_source_format(std::string_view name);
std::string_view source_format_name(SourceFormat format);

struct ParsedInteractions {
  std::vector<Interaction> interactions;
  IdMaps ids;
};

// Parses the raw log into the canonical interaction table. Malformed records
// raise Error with the 1-based line number; an input with no records raises
// Error("no records").
ParsedInteractions parse_interactions(std::istream& source, SourceFormat format);

struct DatasetStats {
  std::size_t num_users = 0;
  std::size_t num_items = 0;
  std::size_t num_interactions = 0;
  double avg_sequence_length = 0.0;  // interactions / users, 2 decimals
  double sparsity_percent = 0.0;     // 100 * (1 - interactions/(users*items))
};

DatasetStats dataset_stats(const std::vector<Interaction>& interactions);

// Same statistics over per-user sequences (the post-filter view).
DatasetStats dataset_stats(const std::map<UserId, std::vector<ItemId>>& sequences);

}  // namespace seqaug
