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
#include "seqaug/augmentation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace seqaug {
namespace {

// Drops the first item and inserts `injected` at `pos` in [0, m-1], keeping
// the original length m.
Sequence drop_first_and_insert(const Sequence& seq, ItemId injected, std::size_t pos) {
  Sequence out;
  out.reserve(seq.size());
  out.insert(out.end(), seq.begin() + 1, seq.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), injected);
  return out;
}

std::vector<ItemId> sorted_unique(const Sequence& seq) {
  std::vector<ItemId> v(seq.begin(), seq.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::none: return "none";
    case Strategy::ni: return "ni";
    case Strategy::ri: return "ri";
    case Strategy::im: return "im";
    case Strategy::sr: return "sr";
    case Strategy::ss: return "ss";
    case Strategy::sw: return "sw";
  }
  throw Error("invalid strategy value");
}

Strategy parse_strategy(std::string_view name) {
  if (name == "none") return Strategy::none;
  if (name == "ni") return Strategy::ni;
  if (name == "ri") return Strategy::ri;
  if (name == "im") return Strategy::im;
  if (name == "sr") return Strategy::sr;
  if (name == "ss") return Strategy::ss;
  if (name == "sw") return Strategy::sw;
  throw Error("unknown strategy '" + std::string(name) +
              "' (expected none, ni, ri, im, sr, ss or sw)");
}

std::vector<Sequence> augment_ni(const Sequence& seq, std::uint32_t n_aug,
                                 const std::vector<ItemId>& catalog, Rng& rng) {
  const std::size_t m = seq.size();
  if (m < 2) throw Error("ni: sequence must have at least 2 items");

  const std::unordered_set<ItemId> present(seq.begin(), seq.end());
  std::vector<ItemId> candidates;
  candidates.reserve(catalog.size() - std::min(catalog.size(), present.size()));
  for (ItemId item : catalog)
    if (!present.count(item)) candidates.push_back(item);
  if (candidates.empty()) throw Error("no negative candidates");

  std::vector<Sequence> out;
  out.reserve(n_aug - 1);
  for (std::uint32_t k = 1; k < n_aug; ++k) {
    const ItemId negative = candidates[rng.index(candidates.size())];
    const std::size_t pos = rng.index(m);
    out.push_back(drop_first_and_insert(seq, negative, pos));
  }
  return out;
}

std::vector<Sequence> augment_ri(const Sequence& seq, std::uint32_t n_aug, Rng& rng) {
  const std::size_t m = seq.size();
  if (m < 2) return {};  // too short to drop an item; caller keeps the original

  const std::vector<ItemId> present = sorted_unique(seq);
  std::vector<Sequence> out;
  out.reserve(n_aug - 1);
  for (std::uint32_t k = 1; k < n_aug; ++k) {
    const ItemId positive = present[rng.index(present.size())];
    const std::size_t pos = rng.index(m);
    out.push_back(drop_first_and_insert(seq, positive, pos));
  }
  return out;
}

std::vector<Sequence> augment_im(const Sequence& seq, std::uint32_t n_aug, double mask_p,
                                 Rng& rng) {
  const std::size_t m = seq.size();
  if (m < 2) throw Error("im: sequence must have at least 2 items");
  if (!(mask_p > 0.0) || !(mask_p < 1.0)) throw Error("im: mask ratio must lie in (0, 1)");

  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(mask_p * static_cast<double>(m))));

  std::vector<Sequence> out;
  out.reserve(n_aug - 1);
  for (std::uint32_t a = 1; a < n_aug; ++a) {
    Sequence masked = seq;
    for (std::size_t pos : rng.sample_indices(m, k)) masked[pos] = kMaskSentinel;
    out.push_back(std::move(masked));
  }
  return out;
}

std::vector<Sequence> augment_sr(const Sequence& seq, std::uint32_t n_aug,
                                 std::uint32_t synonym_count, const ItemEmbeddingTable& table,
                                 Rng& rng) {
  const std::size_t m = seq.size();
  if (m == 0) throw Error("sr: empty sequence");
  if (synonym_count == 0) throw Error("sr: synonym count must be positive");
  if (n_aug <= 1) return {};
  for (ItemId item : seq)
    if (!table.contains(item))
      throw Error("item " + std::to_string(item) + " not in embedding table");

  // Neighbor lists are capped by the table size; short tables fan out less.
  const auto max_rank = static_cast<std::uint32_t>(std::min<std::size_t>(
      synonym_count, table.vectors.size() - 1));

  const std::size_t quota = n_aug - 1;
  const std::size_t wanted =
      (quota + synonym_count - 1) / synonym_count;  // ceil(quota / s)

  std::vector<Sequence> out;
  out.reserve(quota);

  const auto replace_at = [&](std::size_t pos, ItemId neighbor) {
    Sequence copy = seq;
    copy[pos] = neighbor;
    out.push_back(std::move(copy));
  };

  if (wanted <= m) {
    // Distinct positions, each fanning out up to s variants; the last
    // position's fan-out is truncated when (n_aug - 1) % s != 0.
    const std::vector<std::size_t> positions = rng.sample_indices(m, wanted);
    for (std::size_t pos : positions) {
      const std::vector<ItemId> neighbors =
          top_synonyms(table, seq[pos], max_rank);
      for (ItemId neighbor : neighbors) {
        if (out.size() == quota) return out;
        replace_at(pos, neighbor);
      }
    }
    return out;
  }

  // More variants requested than positions exist: cycle positions, one
  // neighbor rank per pass, never exceeding rank s.
  const std::vector<std::size_t> positions = rng.sample_indices(m, m);
  std::vector<std::vector<ItemId>> neighbors(m);
  for (std::size_t i = 0; i < m; ++i)
    neighbors[i] = top_synonyms(table, seq[positions[i]], max_rank);
  for (std::uint32_t rank = 0; rank < max_rank && out.size() < quota; ++rank)
    for (std::size_t i = 0; i < m && out.size() < quota; ++i)
      if (rank < neighbors[i].size()) replace_at(positions[i], neighbors[i][rank]);
  return out;
}

std::vector<Sequence> augment_ss(const Sequence& seq, std::uint32_t n_aug) {
  const std::size_t m = seq.size();
  std::vector<Sequence> out;
  if (m < 3 || n_aug <= 1) return out;

  // Prefixes of length m-1 down to max(2, m - (n_aug - 1)); a length-1
  // prefix has no (context, target) pair and is never emitted.
  const std::size_t shortest =
      std::max<std::size_t>(2, m > static_cast<std::size_t>(n_aug - 1)
                                   ? m - (n_aug - 1)
                                   : 2);
  for (std::size_t len = m - 1; len >= shortest; --len) {
    out.emplace_back(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len));
    if (len == shortest) break;
  }
  return out;
}

std::vector<Sequence> augment_sw(const Sequence& seq, std::uint32_t n_aug) {
  const std::size_t m = seq.size();
  std::vector<Sequence> out;
  if (m < 3) return out;

  const std::size_t window = std::max<std::size_t>(
      2, m >= static_cast<std::size_t>(n_aug) ? m - n_aug + 1 : 2);
  if (window >= m) return out;  // the lone window would duplicate the original

  for (std::size_t start = 0; start + window <= m; ++start)
    out.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(start),
                     seq.begin() + static_cast<std::ptrdiff_t>(start + window));
  return out;
}

AugmentedTrainSet augment_dataset(const SequenceMap& train, const AugmentationConfig& config,
                                  const std::vector<ItemId>& catalog,
                                  const ItemEmbeddingTable* table) {
  if (config.n_aug == 0) throw Error("n_aug must be at least 1");
  if (config.strategy == Strategy::sr && table == nullptr)
    throw Error("sr requires an embedding table");
  if (config.strategy == Strategy::sr && config.synonym_count == 0)
    throw Error("sr requires a positive synonym count");
  if (config.strategy == Strategy::im &&
      (!(config.mask_p > 0.0) || !(config.mask_p < 1.0)))
    throw Error("im requires a mask ratio in (0, 1)");

  AugmentedTrainSet out;
  for (const auto& [user, seq] : train) {
    out.sequences.push_back(TaggedSequence{user, seq, std::string(kOriginalTag)});
    if (config.strategy == Strategy::none || config.n_aug == 1) continue;

    Rng rng(derive_seed(config.seed, stream::user, user));
    std::vector<Sequence> artificials;
    switch (config.strategy) {
      case Strategy::ni:
        artificials = augment_ni(seq, config.n_aug, catalog, rng);
        break;
      case Strategy::ri:
        artificials = augment_ri(seq, config.n_aug, rng);
        if (artificials.empty() && seq.size() < 2) ++out.skipped;
        break;
      case Strategy::im:
        artificials = augment_im(seq, config.n_aug, config.mask_p, rng);
        break;
      case Strategy::sr:
        artificials = augment_sr(seq, config.n_aug, config.synonym_count, *table, rng);
        break;
      case Strategy::ss:
        artificials = augment_ss(seq, config.n_aug);
        break;
      case Strategy::sw:
        artificials = augment_sw(seq, config.n_aug);
        break;
      case Strategy::none:
        break;
    }
    const std::string tag(strategy_name(config.strategy));
    for (Sequence& artificial : artificials)
      out.sequences.push_back(TaggedSequence{user, std::move(artificial), tag});
  }
  return out;
}

}  // namespace seqaug
