#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scd/distribution.hpp"
#include "scd/measures.hpp"
#include "scd/sense_model.hpp"
#include "scd/wsd.hpp"

namespace scd {

enum class ScoreStatus { scored, one_sided, unresolvable };
enum class ChangeLabel { stable, changed };

std::string_view to_string(ScoreStatus status);
std::string_view to_string(ChangeLabel label);
std::optional<ScoreStatus> parse_score_status(std::string_view name);
// Accepts "changed"/"stable" and the SemEval encoding "1"/"0".
std::optional<ChangeLabel> parse_change_label(std::string_view name);

struct ScoringConfig {
  WsdConfig wsd;
  Measure measure = Measure::js;
  SmoothingConfig smoothing;

  void validate() const;
};

// Occurrences of one corpus grouped by lemma, file order kept within a lemma.
class CorpusOccurrences {
 public:
  explicit CorpusOccurrences(OccurrenceFile file);
  static CorpusOccurrences load(const std::filesystem::path& path);

  std::uint32_t dim() const { return dim_; }
  const CorpusInfo& info() const { return info_; }
  const std::string& corpus_id() const { return info_.corpus_id; }
  std::span<const OccurrenceEmbedding> occurrences(std::string_view lemma) const;

 private:
  std::uint32_t dim_;
  CorpusInfo info_;
  std::map<std::string, std::vector<OccurrenceEmbedding>, std::less<>> by_lemma_;
};

// Disambiguates every occurrence and averages them (sequentially, in the
// given order). Throws NoOccurrencesError when `occurrences` is empty.
SenseDistribution corpus_distribution(std::string_view lemma, std::string_view corpus_id,
                                      std::span<const OccurrenceEmbedding> occurrences,
                                      std::span<const SenseCandidate> candidates,
                                      const WsdConfig& config);

struct TargetWordResult {
  std::string lemma;
  double score = std::numeric_limits<double>::quiet_NaN();
  ScoreStatus status = ScoreStatus::unresolvable;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::optional<SenseDistribution> d1;
  std::optional<SenseDistribution> d2;
};

using Labels = std::map<std::string, ChangeLabel, std::less<>>;

struct ChangeReport {
  Measure measure = Measure::js;
  std::size_t k = 2;
  std::vector<TargetWordResult> results;  // one per target, in target order
  std::vector<std::string> ranking;       // scored lemmas, most changed first
  std::optional<double> threshold;
  Labels labels;  // filled by classification

  const TargetWordResult* find(std::string_view lemma) const;
  // 1-based rank of a scored lemma.
  std::optional<std::size_t> rank_of(std::string_view lemma) const;
};

// Unknown or fully unembedded lemmas are `unresolvable`, lemmas missing from
// either corpus are `one_sided`; neither throws.
TargetWordResult score_target(std::string_view lemma, const CorpusOccurrences& corpus1,
                              const CorpusOccurrences& corpus2,
                              const SenseInventory& inventory,
                              const SenseEmbeddings& embeddings, const ScoringConfig& config);

// Scores every target on `workers` threads and ranks the results. Output does
// not depend on the worker count. Throws ValidationError when an occurrence
// file's dim differs from the embeddings' dim.
ChangeReport score_targets(std::span<const std::string> lemmas,
                           const CorpusOccurrences& corpus1, const CorpusOccurrences& corpus2,
                           const SenseInventory& inventory, const SenseEmbeddings& embeddings,
                           const ScoringConfig& config, unsigned workers = 1);

// Scored lemmas by descending score, ties by ascending lemma. Throws Error
// when nothing was scored.
std::vector<std::string> rank_targets(std::span<const TargetWordResult> results);

// changed iff score > threshold. Unscored lemmas are stable.
Labels classify(std::span<const TargetWordResult> results, double threshold);

void apply_classification(ChangeReport& report, double threshold);

}  // namespace scd
