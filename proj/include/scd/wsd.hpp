#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scd/sense_model.hpp"

namespace scd {

enum class ScoreMode {
  // Inner products with negatives clamped to 0, then divided by their sum.
  // Falls back to softmax when every inner product is <= 0.
  clamp_normalize,
  softmax,
};

std::string_view to_string(ScoreMode mode);
std::optional<ScoreMode> parse_score_mode(std::string_view name);

struct WsdConfig {
  std::size_t k = 2;
  ScoreMode score_mode = ScoreMode::clamp_normalize;
  // L2-normalize the occurrence and sense vectors before the inner product.
  bool normalize_vectors = false;
  // Rescale the mass of the retained top-k senses to 1. Turning this off is
  // an ablation: the truncated per-occurrence mass is carried as-is and only
  // the corpus-level distribution is renormalized.
  bool renormalize_top_k = true;

  void validate() const;
};

struct SenseProb {
  SenseId sense;
  double probability = 0.0;

  friend bool operator==(const SenseProb&, const SenseProb&) = default;
};

// p(z | w, s) for one occurrence, over the lemma's candidate senses in
// inventory order (zero-probability senses included).
struct OccurrenceSenseProbs {
  std::string lemma;
  std::uint64_t sentence_index = 0;
  std::vector<SenseProb> probs;

  double probability(const SenseId& sense) const;
  double total() const;
  std::size_t nonzero() const;
};

struct SenseCandidate {
  SenseId sense;
  std::span<const float> vector;
};

// Candidate senses of `lemma` that have an embedding, in inventory order.
// Empty when the lemma is unknown or none of its senses resolve.
std::vector<SenseCandidate> resolve_candidates(std::string_view lemma,
                                               const SenseInventory& inventory,
                                               const SenseEmbeddings& embeddings);

// Confidence of each candidate sense for one occurrence vector, normalized to
// a distribution. Throws ValidationError on an empty candidate list or a
// dimension mismatch.
OccurrenceSenseProbs sense_scores(std::span<const float> occurrence,
                                  std::span<const SenseCandidate> candidates,
                                  const WsdConfig& config);

// Keeps the k most probable senses (ties by ascending sense id) and zeroes the
// rest. Returns `p` unchanged when it has at most k nonzero senses.
OccurrenceSenseProbs truncate_top_k(OccurrenceSenseProbs p, std::size_t k,
                                    bool renormalize = true);

// sense_scores followed by truncate_top_k(config.k).
OccurrenceSenseProbs disambiguate(const OccurrenceEmbedding& occurrence,
                                  std::span<const SenseCandidate> candidates,
                                  const WsdConfig& config);

// Resolves candidates first; throws ValidationError for an unresolvable lemma.
OccurrenceSenseProbs disambiguate(const OccurrenceEmbedding& occurrence,
                                  const SenseInventory& inventory,
                                  const SenseEmbeddings& embeddings,
                                  const WsdConfig& config);

}  // namespace scd
