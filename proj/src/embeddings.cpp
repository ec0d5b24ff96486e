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
#include "seqaug/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace seqaug {
namespace {

double dot(const double* a, const double* b, std::size_t dim) {
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(sigmoid(x)) without overflow for large |x|.
double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

struct Vocab {
  std::vector<ItemId> items;  // sorted ascending
  std::unordered_map<ItemId, std::size_t> index;
  std::vector<double> noise_cdf;  // cumulative count^0.75
};

Vocab build_vocab(const SequenceMap& sequences) {
  std::map<ItemId, std::size_t> counts;
  for (const auto& [user, seq] : sequences) {
    for (ItemId item : seq) {
      if (item == kMaskSentinel)
        throw Error("training sequences must not contain the mask sentinel");
      ++counts[item];
    }
  }
  Vocab v;
  v.items.reserve(counts.size());
  v.noise_cdf.reserve(counts.size());
  double cum = 0.0;
  for (const auto& [item, count] : counts) {
    v.index.emplace(item, v.items.size());
    v.items.push_back(item);
    cum += std::pow(static_cast<double>(count), 0.75);
    v.noise_cdf.push_back(cum);
  }
  return v;
}

std::size_t sample_noise(const Vocab& v, Rng& rng) {
  const double target = rng.unit() * v.noise_cdf.back();
  const auto it = std::upper_bound(v.noise_cdf.begin(), v.noise_cdf.end(), target);
  const auto idx = static_cast<std::size_t>(it - v.noise_cdf.begin());
  return std::min(idx, v.noise_cdf.size() - 1);
}

}  // namespace

const std::vector<float>& ItemEmbeddingTable::at(ItemId item) const {
  const auto it = vectors.find(item);
  if (it == vectors.end())
    throw Error("item " + std::to_string(item) + " not in embedding table");
  return it->second;
}

double sgns_step_loss(std::span<const double> center, std::span<const double> positive,
                      const std::vector<std::vector<double>>& negatives) {
  const std::size_t dim = center.size();
  double loss = -log_sigmoid(dot(center.data(), positive.data(), dim));
  for (const auto& n : negatives)
    loss -= log_sigmoid(-dot(center.data(), n.data(), dim));
  return loss;
}

SgnsGradients sgns_step_gradients(std::span<const double> center,
                                  std::span<const double> positive,
                                  const std::vector<std::vector<double>>& negatives) {
  const std::size_t dim = center.size();
  SgnsGradients g;
  g.center.assign(dim, 0.0);
  g.positive.assign(dim, 0.0);
  g.negatives.assign(negatives.size(), std::vector<double>(dim, 0.0));

  const double gp = sigmoid(dot(center.data(), positive.data(), dim)) - 1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    g.center[i] += gp * positive[i];
    g.positive[i] = gp * center[i];
  }
  for (std::size_t j = 0; j < negatives.size(); ++j) {
    const double gn = sigmoid(dot(center.data(), negatives[j].data(), dim));
    for (std::size_t i = 0; i < dim; ++i) {
      g.center[i] += gn * negatives[j][i];
      g.negatives[j][i] = gn * center[i];
    }
  }
  return g;
}

ItemEmbeddingTable train_skipgram(const SequenceMap& sequences, const SkipGramHyper& hyper,
                                  std::vector<double>* epoch_losses) {
  if (sequences.empty()) throw Error("train_skipgram: no sequences");
  if (hyper.dim == 0 || hyper.window == 0 || hyper.negatives == 0)
    throw Error("train_skipgram: dim, window and negatives must be positive");
  if (!(hyper.min_lr > 0.0) || hyper.min_lr > hyper.learning_rate)
    throw Error("train_skipgram: require 0 < min_lr <= learning_rate");

  const Vocab vocab = build_vocab(sequences);
  const std::size_t n = vocab.items.size();
  const std::size_t dim = hyper.dim;

  Rng rng(hyper.seed);
  std::vector<double> input(n * dim);
  std::vector<double> output(n * dim, 0.0);
  const double bound = 0.5 / static_cast<double>(dim);
  for (double& x : input) x = (rng.unit() * 2.0 - 1.0) * bound;

  // Total (center, context) steps per epoch, for the linear lr schedule.
  std::size_t steps_per_epoch = 0;
  const auto w = static_cast<std::ptrdiff_t>(hyper.window);
  for (const auto& [user, seq] : sequences) {
    const auto m = static_cast<std::ptrdiff_t>(seq.size());
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - w);
      const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(m - 1, i + w);
      steps_per_epoch += static_cast<std::size_t>(hi - lo);  // excludes i itself
    }
  }

  const std::size_t total_steps = steps_per_epoch * hyper.epochs;
  std::size_t steps_done = 0;

  std::vector<double> grad_center(dim);
  std::vector<double> grad_out(dim);
  std::vector<std::size_t> neg_idx(hyper.negatives);

  for (std::uint32_t epoch = 0; epoch < hyper.epochs; ++epoch) {
    double epoch_loss = 0.0;
    std::size_t epoch_steps = 0;

    for (const auto& [user, seq] : sequences) {
      const auto m = static_cast<std::ptrdiff_t>(seq.size());
      for (std::ptrdiff_t i = 0; i < m; ++i) {
        const std::size_t ci = vocab.index.at(seq[static_cast<std::size_t>(i)]);
        double* c = input.data() + ci * dim;
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - w);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(m - 1, i + w);

        for (std::ptrdiff_t j = lo; j <= hi; ++j) {
          if (j == i) continue;
          const double progress = total_steps == 0
                                      ? 1.0
                                      : static_cast<double>(steps_done) /
                                            static_cast<double>(total_steps);
          const double lr = std::max(
              hyper.min_lr,
              hyper.learning_rate - (hyper.learning_rate - hyper.min_lr) * progress);
          ++steps_done;

          const std::size_t oi = vocab.index.at(seq[static_cast<std::size_t>(j)]);
          for (std::uint32_t k = 0; k < hyper.negatives; ++k)
            neg_idx[k] = sample_noise(vocab, rng);

          // Gradients evaluated at the pre-update point, then applied.
          std::fill(grad_center.begin(), grad_center.end(), 0.0);

          double* p = output.data() + oi * dim;
          const double xp = dot(c, p, dim);
          const double gp = sigmoid(xp) - 1.0;
          epoch_loss -= log_sigmoid(xp);
          for (std::size_t d = 0; d < dim; ++d) {
            grad_center[d] += gp * p[d];
            grad_out[d] = gp * c[d];
          }
          for (std::size_t d = 0; d < dim; ++d) p[d] -= lr * grad_out[d];

          for (std::uint32_t k = 0; k < hyper.negatives; ++k) {
            double* nv = output.data() + neg_idx[k] * dim;
            const double xn = dot(c, nv, dim);
            const double gn = sigmoid(xn);
            epoch_loss -= log_sigmoid(-xn);
            for (std::size_t d = 0; d < dim; ++d) {
              grad_center[d] += gn * nv[d];
              grad_out[d] = gn * c[d];
            }
            for (std::size_t d = 0; d < dim; ++d) nv[d] -= lr * grad_out[d];
          }

          for (std::size_t d = 0; d < dim; ++d) c[d] -= lr * grad_center[d];
          ++epoch_steps;
        }
      }
    }

    if (epoch_losses)
      epoch_losses->push_back(epoch_steps == 0 ? 0.0
                                               : epoch_loss / static_cast<double>(epoch_steps));
  }

  ItemEmbeddingTable table;
  table.dim = hyper.dim;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::vector<float> vec(dim);
    for (std::size_t d = 0; d < dim; ++d)
      vec[d] = static_cast<float>(input[idx * dim + d]);
    table.vectors.emplace(vocab.items[idx], std::move(vec));
  }
  return table;
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw Error("cosine_similarity: dimension mismatch");
  double num = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    na += static_cast<double>(a[i]) * static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]) * static_cast<double>(b[i]);
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return num / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<ItemId> top_synonyms(const ItemEmbeddingTable& table, ItemId item, std::uint32_t s) {
  const std::vector<float>& query = table.at(item);
  if (static_cast<std::size_t>(s) >= table.vectors.size())
    throw Error("top_synonyms: s must be smaller than the number of items");

  std::vector<std::pair<double, ItemId>> scored;
  scored.reserve(table.vectors.size() - 1);
  for (const auto& [other, vec] : table.vectors) {
    if (other == item) continue;
    scored.emplace_back(cosine_similarity(query, vec), other);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  std::vector<ItemId> out;
  out.reserve(s);
  for (std::uint32_t i = 0; i < s; ++i) out.push_back(scored[i].second);
  return out;
}

}  // namespace seqaug
