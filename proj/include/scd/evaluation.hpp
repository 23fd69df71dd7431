#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scd/pipeline.hpp"

namespace scd {

struct GoldAnnotations {
  std::map<std::string, ChangeLabel, std::less<>> binary;
  std::map<std::string, double, std::less<>> graded;
};

// Zero-based column positions in a combined gold TSV.
struct GoldColumns {
  std::size_t lemma = 0;
  std::size_t binary = 1;
  std::size_t graded = 2;
};

// Combined TSV: lemma, binary label (0/1 or stable/changed), graded score.
// Lines starting with '#' and blank lines are skipped.
GoldAnnotations load_gold_tsv(const std::filesystem::path& path, const GoldColumns& columns = {});

// SemEval-2020 Task 1 truth files: "lemma<TAB>0|1" and "lemma<TAB>score".
void load_semeval_binary(const std::filesystem::path& path, GoldAnnotations& gold);
void load_semeval_graded(const std::filesystem::path& path, GoldAnnotations& gold);

struct AccuracyResult {
  double value = 0.0;
  std::size_t correct = 0;
  std::size_t total = 0;
  std::vector<std::string> dropped;  // predicted lemmas absent from gold
};

// matches / total over lemmas present in both. Throws ValidationError on an
// empty overlap.
AccuracyResult accuracy(const Labels& predicted,
                        const std::map<std::string, ChangeLabel, std::less<>>& gold);

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> fractional_ranks(std::span<const double> values);

// Pearson correlation of fractional ranks. nullopt when either rank vector
// has zero variance. Throws ValidationError on fewer than 2 values or a
// length mismatch.
std::optional<double> spearman_rho(std::span<const double> x, std::span<const double> y);

struct SpearmanResult {
  std::optional<double> rho;  // nullopt: undefined (zero variance)
  std::size_t n = 0;
  std::vector<std::string> dropped;
};

SpearmanResult spearman(const std::map<std::string, double, std::less<>>& scores,
                        const std::map<std::string, double, std::less<>>& gold);

struct EvaluationReport {
  std::optional<AccuracyResult> accuracy;
  std::optional<SpearmanResult> spearman;

  std::size_t n_classified() const { return accuracy ? accuracy->total : 0; }
  std::size_t n_ranked() const { return spearman ? spearman->n : 0; }
};

// Fixed three decimals, e.g. 27/37 -> "0.730".
std::string format_metric(double value);

void write_evaluation_json(std::ostream& out, const EvaluationReport& report);

}  // namespace scd
