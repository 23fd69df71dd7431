#include "scd/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scd/error.hpp"

namespace scd {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kReportHeader = "lemma\tscore\trank\tlabel\tn1\tn2\tstatus";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

// Senses of `d` ordered by their position in the lemma's inventory list.
std::vector<std::pair<std::size_t, const SenseProb*>> inventory_ordered(
    const SenseDistribution& d, const SenseInventory& inventory) {
  const auto* senses = inventory.find(d.lemma);
  std::vector<std::pair<std::size_t, const SenseProb*>> out;
  for (const auto& p : d.probs) {
    std::size_t index = 0;
    if (senses != nullptr) {
      index = static_cast<std::size_t>(std::find(senses->begin(), senses->end(), p.sense) -
                                       senses->begin());
    }
    out.emplace_back(index, &p);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ordered_json distribution_json(const SenseDistribution& d, const SenseInventory* inventory) {
  ordered_json probs = ordered_json::object();
  if (inventory != nullptr) {
    for (const auto& [index, p] : inventory_ordered(d, *inventory)) {
      probs[p->sense.str()] = p->probability;
    }
  } else {
    for (const auto& p : d.probs) probs[p.sense.str()] = p.probability;
  }
  return ordered_json{{"lemma", d.lemma},
                      {"corpus_id", d.corpus_id},
                      {"occurrence_count", d.occurrence_count},
                      {"probs", std::move(probs)}};
}

std::vector<const TargetWordResult*> row_order(const ChangeReport& report) {
  std::vector<const TargetWordResult*> rows;
  for (const auto& lemma : report.ranking) rows.push_back(report.find(lemma));
  for (const auto& r : report.results) {
    if (r.status != ScoreStatus::scored) rows.push_back(&r);
  }
  return rows;
}

}  // namespace

std::string format_score(double score) {
  if (!std::isfinite(score)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", score);
  return buf;
}

void write_report_tsv(std::ostream& out, const ChangeReport& report) {
  out << kReportHeader << '\n';
  for (const auto* r : row_order(report)) {
    auto rank = report.rank_of(r->lemma);
    auto label = report.labels.find(r->lemma);
    out << r->lemma << '\t' << format_score(r->score) << '\t'
        << (rank ? std::to_string(*rank) : "NA") << '\t'
        << (label != report.labels.end() ? to_string(label->second) : "NA") << '\t' << r->n1
        << '\t' << r->n2 << '\t' << to_string(r->status) << '\n';
  }
}

void write_ranking_tsv(std::ostream& out, const ChangeReport& report) {
  out << "rank\tlemma\tscore\n";
  for (std::size_t i = 0; i < report.ranking.size(); ++i) {
    out << i + 1 << '\t' << report.ranking[i] << '\t'
        << format_score(report.find(report.ranking[i])->score) << '\n';
  }
}

void write_report_json(std::ostream& out, const ChangeReport& report,
                       bool with_distributions) {
  ordered_json doc;
  doc["measure"] = std::string(to_string(report.measure));
  doc["k"] = report.k;
  doc["threshold"] = report.threshold ? ordered_json(*report.threshold) : ordered_json(nullptr);
  ordered_json results = ordered_json::array();
  for (const auto* r : row_order(report)) {
    ordered_json item;
    item["lemma"] = r->lemma;
    item["score"] = std::isfinite(r->score) ? ordered_json(r->score) : ordered_json(nullptr);
    auto rank = report.rank_of(r->lemma);
    item["rank"] = rank ? ordered_json(*rank) : ordered_json(nullptr);
    auto label = report.labels.find(r->lemma);
    item["label"] = label != report.labels.end() ? ordered_json(std::string(to_string(label->second)))
                                                 : ordered_json(nullptr);
    item["n1"] = r->n1;
    item["n2"] = r->n2;
    item["status"] = std::string(to_string(r->status));
    if (with_distributions) {
      ordered_json dists = ordered_json::array();
      if (r->d1) dists.push_back(distribution_json(*r->d1, nullptr));
      if (r->d2) dists.push_back(distribution_json(*r->d2, nullptr));
      item["distributions"] = std::move(dists);
    }
    results.push_back(std::move(item));
  }
  doc["results"] = std::move(results);
  out << doc.dump(2) << '\n';
}

std::vector<ReportRow> read_report_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::string line;
  if (!std::getline(in, line) || line != kReportHeader) {
    throw FormatError(path.string() + ": missing report header \"" + std::string(kReportHeader) +
                      "\"");
  }
  std::vector<ReportRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto at = [&] { return path.string() + ": line " + std::to_string(line_no) + ": "; };
    auto f = split_tabs(line);
    if (f.size() != 7) throw FormatError(at() + "expected 7 columns");
    ReportRow row;
    row.lemma = f[0];
    if (f[1] != "NA") {
      double v = 0;
      auto [p, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), v);
      if (ec != std::errc{} || p != f[1].data() + f[1].size()) throw FormatError(at() + "bad score");
      row.score = v;
    }
    if (f[2] != "NA") {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), v);
      if (ec != std::errc{} || p != f[2].data() + f[2].size()) throw FormatError(at() + "bad rank");
      row.rank = v;
    }
    if (f[3] != "NA") {
      row.label = parse_change_label(f[3]);
      if (!row.label) throw FormatError(at() + "bad label \"" + f[3] + "\"");
    }
    auto parse_count = [&](const std::string& s) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size()) throw FormatError(at() + "bad count");
      return v;
    };
    row.n1 = parse_count(f[4]);
    row.n2 = parse_count(f[5]);
    auto status = parse_score_status(f[6]);
    if (!status) throw FormatError(at() + "bad status \"" + f[6] + "\"");
    row.status = *status;
    if ((row.status == ScoreStatus::scored) != row.score.has_value()) {
      throw FormatError(at() + "score must be present exactly for scored rows");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_distribution_jsonl(std::ostream& out, std::span<const SenseDistribution> dists,
                              const SenseInventory& inventory) {
  for (const auto& d : dists) out << distribution_json(d, &inventory).dump() << '\n';
}

void write_distribution_tsv(std::ostream& out, std::span<const SenseDistribution> dists,
                            const SenseInventory& inventory) {
  out << "lemma\tcorpus_id\tsense_index\tsense_id\tprobability\n";
  for (const auto& d : dists) {
    for (const auto& [index, p] : inventory_ordered(d, inventory)) {
      std::ostringstream prob;
      prob.precision(17);
      prob << p->probability;
      out << d.lemma << '\t' << d.corpus_id << '\t' << index << '\t' << p->sense.str() << '\t'
          << prob.str() << '\n';
    }
  }
}

}  // namespace scd
