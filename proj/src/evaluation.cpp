#include "scd/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "scd/error.hpp"

namespace scd {

namespace {

std::vector<std::string> split_tabs(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
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

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos;
}

double parse_real(const std::string& s, const std::string& at) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v)) {
    throw FormatError(at + "bad graded score \"" + s + "\"");
  }
  return v;
}

ChangeLabel parse_label(const std::string& s, const std::string& at) {
  auto label = parse_change_label(s);
  if (!label) throw FormatError(at + "bad binary label \"" + s + "\"");
  return *label;
}

template <typename Fn>
void for_each_row(const std::filesystem::path& path, std::size_t min_columns, Fn fn) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto at = path.string() + ": line " + std::to_string(line_no) + ": ";
    auto fields = split_tabs(line);
    if (fields.size() < min_columns) {
      throw FormatError(at + "expected at least " + std::to_string(min_columns) + " columns");
    }
    fn(fields, at);
  }
}

template <typename Map, typename Value>
void insert_unique(Map& map, const std::string& lemma, Value value, const std::string& at) {
  if (!map.emplace(lemma, value).second) throw FormatError(at + "duplicate lemma \"" + lemma + "\"");
}

}  // namespace

GoldAnnotations load_gold_tsv(const std::filesystem::path& path, const GoldColumns& columns) {
  GoldAnnotations gold;
  auto needed = std::max({columns.lemma, columns.binary, columns.graded}) + 1;
  for_each_row(path, needed, [&](const std::vector<std::string>& f, const std::string& at) {
    insert_unique(gold.binary, f[columns.lemma], parse_label(f[columns.binary], at), at);
    insert_unique(gold.graded, f[columns.lemma], parse_real(f[columns.graded], at), at);
  });
  return gold;
}

void load_semeval_binary(const std::filesystem::path& path, GoldAnnotations& gold) {
  for_each_row(path, 2, [&](const std::vector<std::string>& f, const std::string& at) {
    insert_unique(gold.binary, f[0], parse_label(f[1], at), at);
  });
}

void load_semeval_graded(const std::filesystem::path& path, GoldAnnotations& gold) {
  for_each_row(path, 2, [&](const std::vector<std::string>& f, const std::string& at) {
    insert_unique(gold.graded, f[0], parse_real(f[1], at), at);
  });
}

AccuracyResult accuracy(const Labels& predicted,
                        const std::map<std::string, ChangeLabel, std::less<>>& gold) {
  AccuracyResult result;
  for (const auto& [lemma, label] : predicted) {
    auto it = gold.find(lemma);
    if (it == gold.end()) {
      result.dropped.push_back(lemma);
      continue;
    }
    ++result.total;
    if (it->second == label) ++result.correct;
  }
  if (result.total == 0) throw ValidationError("no predicted lemma has a gold binary label");
  result.value = static_cast<double>(result.correct) / static_cast<double>(result.total);
  return result;
}

std::vector<double> fractional_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) hold ranks i+1..j+1
    double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman_rho(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("spearman: length mismatch");
  if (x.size() < 2) throw ValidationError("spearman needs at least 2 values");
  auto rx = fractional_ranks(x);
  auto ry = fractional_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    double dx = rx[i] - mx;
    double dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

SpearmanResult spearman(const std::map<std::string, double, std::less<>>& scores,
                        const std::map<std::string, double, std::less<>>& gold) {
  SpearmanResult result;
  std::vector<double> predicted;
  std::vector<double> truth;
  for (const auto& [lemma, score] : scores) {
    auto it = gold.find(lemma);
    if (it == gold.end()) {
      result.dropped.push_back(lemma);
      continue;
    }
    predicted.push_back(score);
    truth.push_back(it->second);
  }
  result.n = predicted.size();
  if (result.n < 2) {
    throw ValidationError("spearman needs at least 2 lemmas present in both scores and gold, got " +
                          std::to_string(result.n));
  }
  result.rho = spearman_rho(predicted, truth);
  return result;
}

std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

void write_evaluation_json(std::ostream& out, const EvaluationReport& report) {
  nlohmann::ordered_json doc;
  if (report.accuracy) {
    doc["accuracy"] = report.accuracy->value;
    doc["correct"] = report.accuracy->correct;
  } else {
    doc["accuracy"] = nullptr;
  }
  doc["n_classified"] = report.n_classified();
  if (report.spearman && report.spearman->rho) {
    doc["spearman_rho"] = *report.spearman->rho;
    doc["spearman_status"] = "ok";
  } else {
    doc["spearman_rho"] = nullptr;
    doc["spearman_status"] = report.spearman ? "undefined_zero_variance" : "not_computed";
  }
  doc["n_ranked"] = report.n_ranked();
  out << doc.dump(2) << '\n';
}

}  // namespace scd
