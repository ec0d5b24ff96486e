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
#include "seqaug/preprocessing.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace seqaug {

SequenceMap build_sequences(const std::vector<Interaction>& interactions) {
  std::map<UserId, std::vector<std::pair<std::int64_t, ItemId>>> per_user;
  for (const Interaction& x : interactions)
    per_user[x.user].emplace_back(x.timestamp, x.item);

  SequenceMap out;
  for (auto& [user, events] : per_user) {
    std::stable_sort(events.begin(), events.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ItemId>& seq = out[user];
    seq.reserve(events.size());
    for (const auto& [ts, item] : events) seq.push_back(item);
  }
  return out;
}

SequenceMap filter_cold_start(const SequenceMap& sequences, std::size_t threshold) {
  std::unordered_map<ItemId, std::size_t> item_freq;
  for (const auto& [user, seq] : sequences)
    for (ItemId item : seq) ++item_freq[item];

  SequenceMap out;
  for (const auto& [user, seq] : sequences) {
    std::vector<ItemId> kept;
    kept.reserve(seq.size());
    for (ItemId item : seq)
      if (item_freq[item] >= threshold) kept.push_back(item);
    if (kept.size() >= threshold) out.emplace(user, std::move(kept));
  }
  if (out.empty()) throw Error("dataset empty after filtering");
  return out;
}

SplitDataset leave_one_out_split(const SequenceMap& sequences) {
  SplitDataset split;
  std::set<ItemId> catalog;
  for (const auto& [user, seq] : sequences) {
    if (seq.size() < 3)
      throw Error("user " + std::to_string(user) + ": sequence shorter than 3 items");
    split.train.emplace(user, std::vector<ItemId>(seq.begin(), seq.end() - 2));
    split.valid_target.emplace(user, seq[seq.size() - 2]);
    split.test_target.emplace(user, seq.back());
    catalog.insert(seq.begin(), seq.end());
  }
  split.catalog.assign(catalog.begin(), catalog.end());
  return split;
}

SplitDataset sample_fraction(const SplitDataset& split, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw Error("fraction must lie in (0, 1]");
  if (fraction == 1.0) return split;

  std::vector<UserId> users;
  users.reserve(split.train.size());
  for (const auto& [user, seq] : split.train) users.push_back(user);

  // round() is half-up for fraction sizing.
  const auto keep = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(users.size())));
  if (keep == 0) throw Error("fraction sampling produced an empty user set");

  Rng rng(seed);
  const std::vector<std::size_t> picked = rng.sample_indices(users.size(), keep);

  std::vector<UserId> kept;
  kept.reserve(keep);
  for (std::size_t idx : picked) kept.push_back(users[idx]);
  std::sort(kept.begin(), kept.end());

  SplitDataset out;
  out.catalog = split.catalog;
  for (UserId user : kept) {
    out.train.emplace(user, split.train.at(user));
    out.valid_target.emplace(user, split.valid_target.at(user));
    out.test_target.emplace(user, split.test_target.at(user));
  }
  return out;
}

}  // namespace seqaug
