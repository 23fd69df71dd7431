#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scd/measures.hpp"
#include "scd/pipeline.hpp"

namespace scd {

struct ValidationItem {
  std::string lemma;
  double score = 0.0;
  ChangeLabel gold = ChangeLabel::stable;
};

struct TuningOptions {
  std::size_t repeats = 5;
  std::size_t trials_per_repeat = 50;
  std::uint64_t base_seed = 42;
  // Uniformly random trials before the surrogate takes over.
  std::size_t initial_trials = 5;

  void validate() const;
};

struct ThresholdConfig {
  Measure measure = Measure::js;
  double threshold = 0.0;
  std::size_t repeats = 5;
  std::size_t trials_per_repeat = 50;
  std::uint64_t base_seed = 42;
  double validation_accuracy = 0.0;
};

struct RepeatOutcome {
  std::uint64_t seed = 0;
  double threshold = 0.0;
  double accuracy = 0.0;
  std::size_t trials = 0;  // evaluations actually spent
};

struct TuningResult {
  ThresholdConfig config;
  std::vector<RepeatOutcome> repeats;
};

// Fraction of items whose (score > threshold) matches a gold "changed".
// Throws ValidationError on an empty set.
double accuracy_at(std::span<const ValidationItem> validation, double threshold);

// One seeded model-based search over [min score, max score]: a few uniform
// draws, then a Gaussian-process surrogate with expected improvement picks
// the next threshold among the not yet explored score intervals.
RepeatOutcome search_threshold(std::span<const ValidationItem> validation, std::uint64_t seed,
                               std::size_t trials, std::size_t initial_trials = 5);

// Runs `repeats` searches with seeds base_seed + r and averages their best
// thresholds. Throws ValidationError when the set has fewer than two items or
// a single class.
TuningResult tune(std::span<const ValidationItem> validation, Measure measure,
                  const TuningOptions& options = {});

// {measure, threshold, repeats, trials_per_repeat, base_seed, validation_accuracy}
void write_threshold_json(std::ostream& out, const ThresholdConfig& config);
ThresholdConfig read_threshold_json(const std::filesystem::path& path);

}  // namespace scd
