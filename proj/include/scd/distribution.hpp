#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scd/sense_model.hpp"
#include "scd/wsd.hpp"

namespace scd {

// p(z | w, C): mean of the per-occurrence sense distributions of one lemma in
// one corpus. Senses are listed in inventory order.
struct SenseDistribution {
  std::string lemma;
  std::string corpus_id;
  std::vector<SenseProb> probs;
  std::uint64_t occurrence_count = 0;

  double probability(const SenseId& sense) const;
  double total() const;
  // Divides by the total mass. Used when per-occurrence truncated mass is not
  // renormalized.
  void normalize();
};

// Running per-sense sums for one lemma in one corpus. Accumulators over
// disjoint shards of a stream can be merged.
class DistributionAccumulator {
 public:
  DistributionAccumulator(std::string lemma, std::string corpus_id);

  // Throws ValidationError when the record's lemma differs.
  void add(const OccurrenceSenseProbs& occurrence);
  void merge(const DistributionAccumulator& other);

  std::uint64_t count() const { return count_; }

  // Throws NoOccurrencesError when nothing was added.
  SenseDistribution finish() const;

 private:
  void accumulate(const SenseId& sense, double mass);

  std::string lemma_;
  std::string corpus_id_;
  std::vector<SenseProb> sums_;
  std::uint64_t count_ = 0;
};

// Arithmetic mean over the occurrences. Throws NoOccurrencesError on an empty
// stream and ValidationError when records disagree on the lemma.
SenseDistribution aggregate(std::span<const OccurrenceSenseProbs> occurrences,
                            const std::string& corpus_id);

// Occurrence-count weighted mean of shard distributions of the same lemma and
// corpus. Equals aggregating the concatenated shards.
SenseDistribution combine(std::span<const SenseDistribution> shards);

struct AlignedPair {
  std::vector<SenseId> support;  // ascending
  std::vector<double> p1;
  std::vector<double> p2;
};

// Lays both distributions over the sorted union of their senses, filling
// absent senses with 0.
AlignedPair align(const SenseDistribution& d1, const SenseDistribution& d2);

}  // namespace scd
