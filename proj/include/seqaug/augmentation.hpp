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

#include <string>
#include <string_view>
#include <vector>

#include "seqaug/common.hpp"
#include "seqaug/embeddings.hpp"
#include "seqaug/preprocessing.hpp"

namespace seqaug {

// NI injects a never-interacted item, RI a repeated one (both drop the first
// item to keep the length); IM masks k = max(1, floor(p*m)) items with the
// sentinel; SR swaps one item for a top-s embedding neighbor; SS emits
// prefixes; SW emits length-L sliding windows with L = max(2, m - n_aug + 1).
enum class Strategy { none, ni, ri, im, sr, ss, sw };

std::string_view strategy_name(Strategy strategy);
Strategy parse_strategy(std::string_view name);

struct AugmentationConfig {
  Strategy strategy = Strategy::none;
  std::uint32_t n_aug = 1;  // sequences per original, artificials = n_aug - 1
  double mask_p = 0.0;      // IM only, in (0, 1)
  std::uint32_t synonym_count = 0;  // SR only, >= 1
  std::uint64_t seed = 0;
};

using Sequence = std::vector<ItemId>;

// Per-sequence generators. Each returns the artificial sequences only; the
// original is added by augment_dataset. Random draws come from the supplied
// generator, so fixing it fixes the output.
std::vector<Sequence> augment_ni(const Sequence& seq, std::uint32_t n_aug,
                                 const std::vector<ItemId>& catalog, Rng& rng);
std::vector<Sequence> augment_ri(const Sequence& seq, std::uint32_t n_aug, Rng& rng);
std::vector<Sequence> augment_im(const Sequence& seq, std::uint32_t n_aug, double mask_p,
                                 Rng& rng);
std::vector<Sequence> augment_sr(const Sequence& seq, std::uint32_t n_aug,
                                 std::uint32_t synonym_count, const ItemEmbeddingTable& table,
                                 Rng& rng);
std::vector<Sequence> augment_ss(const Sequence& seq, std::uint32_t n_aug);
std::vector<Sequence> augment_sw(const Sequence& seq, std::uint32_t n_aug);

struct TaggedSequence {
  UserId user = 0;
  Sequence items;
  std::string provenance;  // "original" or the strategy name
};

struct AugmentedTrainSet {
  std::vector<TaggedSequence> sequences;  // sorted by user, original first
  std::size_t skipped = 0;                // sequences skipped with a warning
};

inline constexpr std::string_view kOriginalTag = "original";

// Originals plus per-strategy artificials for every user, deterministic
// given config.seed. Per-user rng substreams are derived from (seed, user),
// so results do not depend on iteration order. `table` is required iff
// strategy == sr.
AugmentedTrainSet augment_dataset(const SequenceMap& train, const AugmentationConfig& config,
                                  const std::vector<ItemId>& catalog,
                                  const ItemEmbeddingTable* table = nullptr);

}  // namespace seqaug
