#include "scd/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "scd/error.hpp"

namespace scd {

namespace {

// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
// thrown by any task is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::string_view to_string(ScoreStatus status) {
  switch (status) {
    case ScoreStatus::scored: return "scored";
    case ScoreStatus::one_sided: return "one_sided";
    case ScoreStatus::unresolvable: return "unresolvable";
  }
  return "unknown";
}

std::string_view to_string(ChangeLabel label) {
  return label == ChangeLabel::changed ? "changed" : "stable";
}

std::optional<ScoreStatus> parse_score_status(std::string_view name) {
  for (auto s : {ScoreStatus::scored, ScoreStatus::one_sided, ScoreStatus::unresolvable}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<ChangeLabel> parse_change_label(std::string_view name) {
  if (name == "changed" || name == "1") return ChangeLabel::changed;
  if (name == "stable" || name == "0") return ChangeLabel::stable;
  return std::nullopt;
}

void ScoringConfig::validate() const {
  wsd.validate();
  smoothing.validate();
}

CorpusOccurrences::CorpusOccurrences(OccurrenceFile file)
    : dim_(file.dim), info_(std::move(file.info)) {
  for (auto& occ : file.records) {
    auto it = by_lemma_.find(occ.lemma);
    if (it == by_lemma_.end()) it = by_lemma_.emplace(occ.lemma, std::vector<OccurrenceEmbedding>{}).first;
    it->second.push_back(std::move(occ));
  }
}

CorpusOccurrences CorpusOccurrences::load(const std::filesystem::path& path) {
  return CorpusOccurrences(read_occurrences(path));
}

std::span<const OccurrenceEmbedding> CorpusOccurrences::occurrences(std::string_view lemma) const {
  auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return {};
  return it->second;
}

SenseDistribution corpus_distribution(std::string_view lemma, std::string_view corpus_id,
                                      std::span<const OccurrenceEmbedding> occurrences,
                                      std::span<const SenseCandidate> candidates,
                                      const WsdConfig& config) {
  DistributionAccumulator acc{std::string(lemma), std::string(corpus_id)};
  for (const auto& occ : occurrences) acc.add(disambiguate(occ, candidates, config));
  auto d = acc.finish();
  if (!config.renormalize_top_k) d.normalize();
  return d;
}

const TargetWordResult* ChangeReport::find(std::string_view lemma) const {
  for (const auto& r : results) {
    if (r.lemma == lemma) return &r;
  }
  return nullptr;
}

std::optional<std::size_t> ChangeReport::rank_of(std::string_view lemma) const {
  auto it = std::find(ranking.begin(), ranking.end(), lemma);
  if (it == ranking.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ranking.begin()) + 1;
}

TargetWordResult score_target(std::string_view lemma, const CorpusOccurrences& corpus1,
                              const CorpusOccurrences& corpus2,
                              const SenseInventory& inventory,
                              const SenseEmbeddings& embeddings, const ScoringConfig& config) {
  TargetWordResult result;
  result.lemma = std::string(lemma);
  auto occ1 = corpus1.occurrences(lemma);
  auto occ2 = corpus2.occurrences(lemma);
  result.n1 = occ1.size();
  result.n2 = occ2.size();

  auto candidates = resolve_candidates(lemma, inventory, embeddings);
  if (candidates.empty()) {
    result.status = ScoreStatus::unresolvable;
    return result;
  }
  if (!occ1.empty()) {
    result.d1 = corpus_distribution(lemma, corpus1.corpus_id(), occ1, candidates, config.wsd);
  }
  if (!occ2.empty()) {
    result.d2 = corpus_distribution(lemma, corpus2.corpus_id(), occ2, candidates, config.wsd);
  }
  if (!result.d1 || !result.d2) {
    result.status = ScoreStatus::one_sided;
    return result;
  }
  result.score = compare(align(*result.d1, *result.d2), config.measure, config.smoothing);
  result.status = ScoreStatus::scored;
  return result;
}

ChangeReport score_targets(std::span<const std::string> lemmas,
                           const CorpusOccurrences& corpus1, const CorpusOccurrences& corpus2,
                           const SenseInventory& inventory, const SenseEmbeddings& embeddings,
                           const ScoringConfig& config, unsigned workers) {
  config.validate();
  for (const auto* corpus : {&corpus1, &corpus2}) {
    if (corpus->dim() != embeddings.dim()) {
      throw ValidationError("occurrence dim " + std::to_string(corpus->dim()) + " of corpus \"" +
                            corpus->corpus_id() + "\" does not match sense embedding dim " +
                            std::to_string(embeddings.dim()));
    }
  }
  ChangeReport report;
  report.measure = config.measure;
  report.k = config.wsd.k;
  report.results.resize(lemmas.size());
  parallel_for(lemmas.size(), workers, [&](std::size_t i) {
    report.results[i] =
        score_target(lemmas[i], corpus1, corpus2, inventory, embeddings, config);
  });
  bool any_scored = std::any_of(report.results.begin(), report.results.end(),
                                [](const auto& r) { return r.status == ScoreStatus::scored; });
  if (any_scored) report.ranking = rank_targets(report.results);
  return report;
}

std::vector<std::string> rank_targets(std::span<const TargetWordResult> results) {
  std::vector<const TargetWordResult*> scored;
  for (const auto& r : results) {
    if (r.status == ScoreStatus::scored) scored.push_back(&r);
  }
  if (scored.empty()) throw Error("no scored targets to rank");
  std::sort(scored.begin(), scored.end(), [](const auto* a, const auto* b) {
    if (a->score != b->score) return a->score > b->score;
    return a->lemma < b->lemma;
  });
  std::vector<std::string> ranking;
  ranking.reserve(scored.size());
  for (const auto* r : scored) ranking.push_back(r->lemma);
  return ranking;
}

Labels classify(std::span<const TargetWordResult> results, double threshold) {
  if (!std::isfinite(threshold)) throw ValidationError("threshold must be finite");
  Labels labels;
  for (const auto& r : results) {
    bool changed = r.status == ScoreStatus::scored && r.score > threshold;
    labels[r.lemma] = changed ? ChangeLabel::changed : ChangeLabel::stable;
  }
  return labels;
}

void apply_classification(ChangeReport& report, double threshold) {
  report.labels = classify(report.results, threshold);
  report.threshold = threshold;
}

}  // namespace scd
