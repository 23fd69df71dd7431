#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scd/distribution.hpp"
#include "scd/pipeline.hpp"
#include "scd/sense_model.hpp"

namespace scd {

// Scores are written with 12 significant digits; "NA" marks absent values.
std::string format_score(double score);

// Columns: lemma score rank label n1 n2 status. Rows follow the ranking, then
// unscored lemmas in target order.
void write_report_tsv(std::ostream& out, const ChangeReport& report);

// rank lemma score, scored lemmas only.
void write_ranking_tsv(std::ostream& out, const ChangeReport& report);

// Pretty-printed JSON. Distributions are embedded per result when requested.
void write_report_json(std::ostream& out, const ChangeReport& report,
                       bool with_distributions);

struct ReportRow {
  std::string lemma;
  std::optional<double> score;
  std::optional<std::size_t> rank;
  std::optional<ChangeLabel> label;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  ScoreStatus status = ScoreStatus::scored;
};

// Reads a report written by write_report_tsv.
std::vector<ReportRow> read_report_tsv(const std::filesystem::path& path);

// {"lemma", "corpus_id", "occurrence_count", "probs": {sense: p, ...}} per
// line, with senses in inventory order.
void write_distribution_jsonl(std::ostream& out, std::span<const SenseDistribution> dists,
                              const SenseInventory& inventory);

// lemma corpus_id sense_index sense_id probability, one row per sense.
void write_distribution_tsv(std::ostream& out, std::span<const SenseDistribution> dists,
                            const SenseInventory& inventory);

}  // namespace scd
