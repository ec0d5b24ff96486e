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
#include <span>
#include <vector>

#include "seqaug/common.hpp"
#include "seqaug/preprocessing.hpp"

namespace seqaug {

struct ItemEmbeddingTable {
  std::uint32_t dim = 0;
  std::map<ItemId, std::vector<float>> vectors;

  bool contains(ItemId item) const { return vectors.count(item) != 0; }
  const std::vector<float>& at(ItemId item) const;
};

struct SkipGramHyper {
  std::uint32_t dim = 64;
  std::uint32_t window = 5;
  std::uint32_t negatives = 5;
  std::uint32_t epochs = 5;
  double learning_rate = 0.025;
  double min_lr = 0.0001;
  std::uint64_t seed = 1;
};

// Skip-gram with negative sampling over the training sequences. Input-side
// vectors are returned. Single-threaded, deterministic given hyper.seed.
// Noise distribution is unigram frequency^0.75. Learning rate decays
// linearly from learning_rate to min_lr over all (center, context) steps.
// Per-epoch mean losses are appended to epoch_losses when non-null.
ItemEmbeddingTable train_skipgram(const SequenceMap& sequences, const SkipGramHyper& hyper,
                                  std::vector<double>* epoch_losses = nullptr);

// The s items most cosine-similar to `item`, self excluded, ties broken by
// ascending item id. Requires s < number of items in the table.
std::vector<ItemId> top_synonyms(const ItemEmbeddingTable& table, ItemId item, std::uint32_t s);

double cosine_similarity(std::span<const float> a, std::span<const float> b);

// Loss and analytic gradients for one (center, positive, negatives) step:
//   L = -log sigmoid(c.p) - sum_j log sigmoid(-c.n_j)
// Exposed so the gradients can be checked against finite differences of the
// loss.
double sgns_step_loss(std::span<const double> center, std::span<const double> positive,
                      const std::vector<std::vector<double>>& negatives);

struct SgnsGradients {
  std::vector<double> center;
  std::vector<double> positive;
  std::vector<std::vector<double>> negatives;
};

SgnsGradients sgns_step_gradients(std::span<const double> center,
                                  std::span<const double> positive,
                                  const std::vector<std::vector<double>>& negatives);

}  // namespace seqaug
