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

#include <iosfwd>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "seqaug/augmentation.hpp"
#include "seqaug/common.hpp"

namespace seqaug {

// One supervised example: predict `target` from the items before it.
struct TrainPair {
  std::vector<ItemId> context;  // non-sentinel, time order, truncated suffix
  ItemId target = 0;

  bool operator==(const TrainPair&) const = default;
};

// One pair per position with a non-sentinel item and at least one preceding
// non-sentinel item. Masked positions are excluded both as targets and from
// contexts.
std::vector<TrainPair> extract_pairs(const AugmentedTrainSet& train_set,
                                     std::uint32_t max_context_n);

// Next-item scorer contract. score() is a pure function of (model, history,
// candidate); histories longer than max_context_n are truncated to their
// most recent max_context_n items.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string_view kind() const = 0;
  virtual std::uint32_t max_context_n() const = 0;
  virtual double score(std::span<const ItemId> history, ItemId candidate) const = 0;
  virtual std::vector<double> score_many(std::span<const ItemId> history,
                                         std::span<const ItemId> candidates) const;
  virtual void save(std::ostream& out) const = 0;
};

std::unique_ptr<Scorer> load_scorer(std::istream& in);

// score(history, i) = global frequency of i among training targets.
std::unique_ptr<Scorer> train_popularity(const std::vector<TrainPair>& pairs,
                                         std::uint32_t max_context_n = 50);

// score(history, i) = count(last(history) -> i) + lambda * popularity(i).
std::unique_ptr<Scorer> train_markov(const std::vector<TrainPair>& pairs,
                                     std::uint32_t max_context_n = 50,
                                     double backoff_lambda = 0.01);

struct EmbeddingScorerHyper {
  std::uint32_t dim = 32;
  std::uint32_t epochs = 5;
  double learning_rate = 0.05;
  std::uint32_t negatives_per_pair = 5;
  std::uint64_t seed = 1;
  std::uint32_t max_context_n = 50;
};

// Pairwise-ranking scorer: context vector is the mean of input embeddings of
// the context items; each pair takes gradient steps on
// -log sigmoid(c . (v_target - v_negative)) for uniformly drawn negatives.
// Deterministic given hyper.seed. score(history, i) = mean-context . v_i.
std::unique_ptr<Scorer> train_embedding_scorer(const std::vector<TrainPair>& pairs,
                                               const EmbeddingScorerHyper& hyper,
                                               std::vector<double>* epoch_losses = nullptr);

struct ScoredItem {
  ItemId item = 0;
  double score = 0.0;
};

// Scores each candidate; entries keep the candidate order. Ranking is by
// descending score with ties broken by ascending item id.
std::vector<ScoredItem> score_candidates(const Scorer& model,
                                         std::span<const ItemId> history,
                                         std::span<const ItemId> candidates);

std::vector<ScoredItem> rank_candidates(const Scorer& model, std::span<const ItemId> history,
                                        std::span<const ItemId> candidates);

// Pairwise ranking loss and gradients for one (context, positive, negative)
// triple, exposed for finite-difference verification:
//   L = -log sigmoid(c . (p - n))
double ranking_triple_loss(std::span<const double> context, std::span<const double> positive,
                           std::span<const double> negative);

struct RankingGradients {
  std::vector<double> context;
  std::vector<double> positive;
  std::vector<double> negative;
};

RankingGradients ranking_triple_gradients(std::span<const double> context,
                                          std::span<const double> positive,
                                          std::span<const double> negative);

}  // namespace seqaug
