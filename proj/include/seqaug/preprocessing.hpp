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

#include <map>
#include <vector>

#include "seqaug/common.hpp"
#include "seqaug/ingestion.hpp"

namespace seqaug {

// Time-ascending item list per user. Ordered map so iteration order is the
// user-id order everywhere.
using SequenceMap = std::map<UserId, std::vector<ItemId>>;

// Sorts each user's interactions by timestamp; equal timestamps keep the
// input-file order (stable sort).
SequenceMap build_sequences(const std::vector<Interaction>& interactions);

// Single pass: drop items with global frequency < threshold, then drop users
// whose remaining sequence is shorter than threshold. Not iterated to a
// fixed point.
SequenceMap filter_cold_start(const SequenceMap& sequences, std::size_t threshold = 5);

// Leave-one-out split: for every user the original sequence equals
// train ++ [valid_target] ++ [test_target].
struct SplitDataset {
  SequenceMap train;
  std::map<UserId, ItemId> valid_target;
  std::map<UserId, ItemId> test_target;
  std::vector<ItemId> catalog;  // sorted union of items across all parts

  std::size_t num_items() const { return catalog.size(); }
  std::size_t num_users() const { return train.size(); }
};

SplitDataset leave_one_out_split(const SequenceMap& sequences);

// Keeps a uniform random subset of round(fraction * |U|) users in all three
// parts. fraction == 1.0 returns the input unchanged; the catalog always
// stays the full item universe. Deterministic given seed.
SplitDataset sample_fraction(const SplitDataset& split, double fraction, std::uint64_t seed);

}  // namespace seqaug
