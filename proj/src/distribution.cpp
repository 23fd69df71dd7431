#include "scd/distribution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scd/error.hpp"

namespace scd {

double SenseDistribution::probability(const SenseId& sense) const {
  for (const auto& p : probs) {
    if (p.sense == sense) return p.probability;
  }
  return 0.0;
}

double SenseDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0,
                         [](double acc, const SenseProb& p) { return acc + p.probability; });
}

void SenseDistribution::normalize() {
  double mass = total();
  if (mass <= 0.0) return;
  for (auto& p : probs) p.probability /= mass;
}

DistributionAccumulator::DistributionAccumulator(std::string lemma, std::string corpus_id)
    : lemma_(std::move(lemma)), corpus_id_(std::move(corpus_id)) {}

void DistributionAccumulator::accumulate(const SenseId& sense, double mass) {
  // Candidate lists are short (a handful of senses per lemma).
  for (auto& s : sums_) {
    if (s.sense == sense) {
      s.probability += mass;
      return;
    }
  }
  sums_.push_back({sense, mass});
}

void DistributionAccumulator::add(const OccurrenceSenseProbs& occurrence) {
  if (occurrence.lemma != lemma_) {
    throw ValidationError("cannot aggregate occurrence of \"" + occurrence.lemma +
                          "\" into distribution of \"" + lemma_ + "\"");
  }
  for (const auto& p : occurrence.probs) accumulate(p.sense, p.probability);
  ++count_;
}

void DistributionAccumulator::merge(const DistributionAccumulator& other) {
  if (other.lemma_ != lemma_ || other.corpus_id_ != corpus_id_) {
    throw ValidationError("cannot merge accumulators of different lemma/corpus");
  }
  for (const auto& s : other.sums_) accumulate(s.sense, s.probability);
  count_ += other.count_;
}

SenseDistribution DistributionAccumulator::finish() const {
  if (count_ == 0) {
    throw NoOccurrencesError("no occurrences of \"" + lemma_ + "\" in corpus \"" +
                             corpus_id_ + "\"");
  }
  SenseDistribution d{lemma_, corpus_id_, sums_, count_};
  for (auto& p : d.probs) p.probability /= static_cast<double>(count_);
  return d;
}

SenseDistribution aggregate(std::span<const OccurrenceSenseProbs> occurrences,
                            const std::string& corpus_id) {
  if (occurrences.empty()) throw NoOccurrencesError("no occurrences to aggregate");
  DistributionAccumulator acc(occurrences.front().lemma, corpus_id);
  for (const auto& o : occurrences) acc.add(o);
  return acc.finish();
}

SenseDistribution combine(std::span<const SenseDistribution> shards) {
  std::vector<const SenseDistribution*> live;
  for (const auto& s : shards) {
    if (s.occurrence_count > 0) live.push_back(&s);
  }
  if (live.empty()) throw NoOccurrencesError("no occurrences in any shard");
  const auto& first = *live.front();
  std::uint64_t total = 0;
  SenseDistribution out{first.lemma, first.corpus_id, {}, 0};
  for (const auto* s : live) {
    if (s->lemma != first.lemma || s->corpus_id != first.corpus_id) {
      throw ValidationError("cannot combine shards of different lemma/corpus");
    }
    total += s->occurrence_count;
    for (const auto& p : s->probs) {
      auto it = std::find_if(out.probs.begin(), out.probs.end(),
                             [&](const SenseProb& q) { return q.sense == p.sense; });
      double mass = p.probability * static_cast<double>(s->occurrence_count);
      if (it == out.probs.end()) {
        out.probs.push_back({p.sense, mass});
      } else {
        it->probability += mass;
      }
    }
  }
  for (auto& p : out.probs) p.probability /= static_cast<double>(total);
  out.occurrence_count = total;
  return out;
}

AlignedPair align(const SenseDistribution& d1, const SenseDistribution& d2) {
  if (d1.lemma != d2.lemma) {
    throw ValidationError("cannot align distributions of \"" + d1.lemma + "\" and \"" +
                          d2.lemma + "\"");
  }
  if (d1.occurrence_count == 0 || d2.occurrence_count == 0) {
    throw NoOccurrencesError("cannot align empty distribution of \"" + d1.lemma + "\"");
  }
  std::map<SenseId, std::pair<double, double>> merged;
  for (const auto& p : d1.probs) merged[p.sense].first = p.probability;
  for (const auto& p : d2.probs) merged[p.sense].second = p.probability;

  AlignedPair pair;
  pair.support.reserve(merged.size());
  pair.p1.reserve(merged.size());
  pair.p2.reserve(merged.size());
  for (const auto& [sense, probs] : merged) {
    pair.support.push_back(sense);
    pair.p1.push_back(probs.first);
    pair.p2.push_back(probs.second);
  }
  return pair;
}

}  // namespace scd
