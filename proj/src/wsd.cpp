#include "scd/wsd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scd/error.hpp"

namespace scd {

namespace {

double dot(std::span<const float> a, std::span<const float> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return sum;
}

double norm(std::span<const float> a) { return std::sqrt(dot(a, a)); }

void softmax_in_place(std::vector<double>& scores) {
  double peak = *std::max_element(scores.begin(), scores.end());
  double total = 0.0;
  for (double& s : scores) {
    s = std::exp(s - peak);
    total += s;
  }
  for (double& s : scores) s /= total;
}

}  // namespace

std::string_view to_string(ScoreMode mode) {
  return mode == ScoreMode::softmax ? "softmax" : "clamp_normalize";
}

std::optional<ScoreMode> parse_score_mode(std::string_view name) {
  if (name == "clamp_normalize") return ScoreMode::clamp_normalize;
  if (name == "softmax") return ScoreMode::softmax;
  return std::nullopt;
}

void WsdConfig::validate() const {
  if (k < 1) throw ValidationError("k must be at least 1");
}

double OccurrenceSenseProbs::probability(const SenseId& sense) const {
  for (const auto& p : probs) {
    if (p.sense == sense) return p.probability;
  }
  return 0.0;
}

double OccurrenceSenseProbs::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0,
                         [](double acc, const SenseProb& p) { return acc + p.probability; });
}

std::size_t OccurrenceSenseProbs::nonzero() const {
  return static_cast<std::size_t>(std::count_if(
      probs.begin(), probs.end(), [](const SenseProb& p) { return p.probability > 0.0; }));
}

std::vector<SenseCandidate> resolve_candidates(std::string_view lemma,
                                               const SenseInventory& inventory,
                                               const SenseEmbeddings& embeddings) {
  std::vector<SenseCandidate> out;
  const auto* senses = inventory.find(lemma);
  if (senses == nullptr) return out;
  for (const auto& s : *senses) {
    if (auto v = embeddings.find(s)) out.push_back({s, *v});
  }
  return out;
}

OccurrenceSenseProbs sense_scores(std::span<const float> occurrence,
                                  std::span<const SenseCandidate> candidates,
                                  const WsdConfig& config) {
  if (candidates.empty()) throw ValidationError("no candidate senses to score");
  std::vector<double> scores(candidates.size());
  double occ_norm = config.normalize_vectors ? norm(occurrence) : 1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (c.vector.size() != occurrence.size()) {
      throw ValidationError("dimension mismatch: occurrence has " +
                            std::to_string(occurrence.size()) + ", sense \"" + c.sense.str() +
                            "\" has " + std::to_string(c.vector.size()));
    }
    scores[i] = dot(c.vector, occurrence);
    if (config.normalize_vectors) {
      double denom = occ_norm * norm(c.vector);
      scores[i] = denom > 0.0 ? scores[i] / denom : 0.0;
    }
  }

  if (config.score_mode == ScoreMode::softmax) {
    softmax_in_place(scores);
  } else {
    double total = 0.0;
    for (double s : scores) total += std::max(s, 0.0);
    if (total > 0.0) {
      for (double& s : scores) s = std::max(s, 0.0) / total;
    } else {
      softmax_in_place(scores);
    }
  }

  OccurrenceSenseProbs out;
  out.probs.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.probs.push_back({candidates[i].sense, scores[i]});
  }
  return out;
}

OccurrenceSenseProbs truncate_top_k(OccurrenceSenseProbs p, std::size_t k, bool renormalize) {
  if (k == 0) throw ValidationError("k must be at least 1");
  if (p.nonzero() <= k) return p;

  std::vector<std::size_t> order(p.probs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = p.probs[a];
    const auto& pb = p.probs[b];
    if (pa.probability != pb.probability) return pa.probability > pb.probability;
    return pa.sense < pb.sense;
  });
  double kept = 0.0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    auto& entry = p.probs[order[r]];
    if (r < k) {
      kept += entry.probability;
    } else {
      entry.probability = 0.0;
    }
  }
  if (renormalize) {
    for (std::size_t r = 0; r < k; ++r) p.probs[order[r]].probability /= kept;
  }
  return p;
}

OccurrenceSenseProbs disambiguate(const OccurrenceEmbedding& occurrence,
                                  std::span<const SenseCandidate> candidates,
                                  const WsdConfig& config) {
  auto probs = sense_scores(occurrence.vector, candidates, config);
  probs = truncate_top_k(std::move(probs), config.k, config.renormalize_top_k);
  probs.lemma = occurrence.lemma;
  probs.sentence_index = occurrence.sentence_index;
  return probs;
}

OccurrenceSenseProbs disambiguate(const OccurrenceEmbedding& occurrence,
                                  const SenseInventory& inventory,
                                  const SenseEmbeddings& embeddings, const WsdConfig& config) {
  auto candidates = resolve_candidates(occurrence.lemma, inventory, embeddings);
  if (candidates.empty()) {
    throw ValidationError("unresolvable lemma \"" + occurrence.lemma +
                          "\": no sense with an embedding");
  }
  return disambiguate(occurrence, candidates, config);
}

}  // namespace scd
