#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scd::testing {

OracleDist oracle_occurrence(const std::vector<double>& f, const OracleSenses& senses,
                             std::size_t k) {
  std::vector<double> raw;
  for (const auto& [id, z] : senses) {
    double s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += z[i] * f[i];
    raw.push_back(s);
  }
  std::vector<double> p(raw.size());
  double positive = 0;
  for (double s : raw) positive += s > 0 ? s : 0;
  if (positive > 0) {
    for (std::size_t i = 0; i < raw.size(); ++i) p[i] = (raw[i] > 0 ? raw[i] : 0) / positive;
  } else {
    double m = raw[0];
    for (double s : raw) m = std::max(m, s);
    double z = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) z += std::exp(raw[i] - m);
    for (std::size_t i = 0; i < raw.size(); ++i) p[i] = std::exp(raw[i] - m) / z;
  }

  std::vector<std::pair<double, std::string>> ranked;
  for (std::size_t i = 0; i < p.size(); ++i) ranked.emplace_back(p[i], senses[i].first);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });
  std::size_t nonzero = 0;
  for (double x : p) nonzero += x > 0;

  OracleDist out;
  for (std::size_t i = 0; i < p.size(); ++i) out[senses[i].first] = p[i];
  if (nonzero <= k) return out;
  double kept = 0;
  for (std::size_t r = 0; r < k; ++r) kept += ranked[r].first;
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    out[ranked[r].second] = r < k ? ranked[r].first / kept : 0.0;
  }
  return out;
}

OracleDist oracle_corpus(const std::vector<std::vector<double>>& occurrences,
                         const OracleSenses& senses, std::size_t k) {
  OracleDist sum;
  for (const auto& f : occurrences) {
    for (const auto& [id, p] : oracle_occurrence(f, senses, k)) sum[id] += p;
  }
  for (auto& [id, p] : sum) p /= static_cast<double>(occurrences.size());
  return sum;
}

double oracle_measure(const std::string& name, const std::vector<double>& a,
                      const std::vector<double>& b, double epsilon) {
  const std::size_t n = a.size();
  if (name == "kl") {
    double sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sa += a[i] + epsilon;
      sb += b[i] + epsilon;
    }
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = (a[i] + epsilon) / sa;
      double y = (b[i] + epsilon) / sb;
      total += x * std::log(x / y);
    }
    return total;
  }
  if (name == "js") {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = (a[i] + b[i]) / 2;
      if (a[i] > 0) total += 0.5 * a[i] * std::log(a[i] / m);
      if (b[i] > 0) total += 0.5 * b[i] * std::log(b[i] / m);
    }
    return total;
  }
  if (name == "bray_curtis") {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
      num += std::fabs(a[i] - b[i]);
      den += std::fabs(a[i] + b[i]);
    }
    return num / den;
  }
  if (name == "canberra") {
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0 && b[i] == 0) continue;
      total += std::fabs(a[i] - b[i]) / (std::fabs(a[i]) + std::fabs(b[i]));
    }
    return total;
  }
  if (name == "chebyshev") {
    double m = 0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
  }
  if (name == "cosine") {
    double ab = 0, aa = 0, bb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ab += a[i] * b[i];
      aa += a[i] * a[i];
      bb += b[i] * b[i];
    }
    return 1 - ab / (std::sqrt(aa) * std::sqrt(bb));
  }
  if (name == "euclidean") {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  }
  throw std::invalid_argument("unknown measure " + name);
}

double oracle_measure(const std::string& name, const OracleDist& p1, const OracleDist& p2,
                      double epsilon) {
  std::map<std::string, std::pair<double, double>> merged;
  for (const auto& [id, p] : p1) merged[id].first = p;
  for (const auto& [id, p] : p2) merged[id].second = p;
  std::vector<double> a, b;
  for (const auto& [id, pair] : merged) {
    a.push_back(pair.first);
    b.push_back(pair.second);
  }
  return oracle_measure(name, a, b, epsilon);
}

double oracle_score(const std::vector<std::vector<double>>& corpus1,
                    const std::vector<std::vector<double>>& corpus2, const OracleSenses& senses,
                    std::size_t k, const std::string& measure) {
  return oracle_measure(measure, oracle_corpus(corpus1, senses, k),
                        oracle_corpus(corpus2, senses, k));
}

double oracle_best_accuracy(const std::vector<double>& scores, const std::vector<bool>& changed) {
  std::vector<double> sorted = scores;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> thresholds = {sorted.front(), sorted.back()};
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] != sorted[i + 1]) thresholds.push_back((sorted[i] + sorted[i + 1]) / 2);
  }
  double best = 0;
  for (double t : thresholds) {
    std::size_t ok = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) ok += (scores[i] > t) == changed[i];
    best = std::max(best, static_cast<double>(ok) / static_cast<double>(scores.size()));
  }
  return best;
}

double oracle_spearman_closed_form(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t below = 0;
      for (std::size_t j = 0; j < n; ++j) below += v[j] < v[i];
      r[i] = static_cast<double>(below + 1);
    }
    return r;
  };
  auto rx = ranks(x);
  auto ry = ranks(y);
  double d2 = 0;
  for (std::size_t i = 0; i < n; ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  double nn = static_cast<double>(n);
  return 1 - 6 * d2 / (nn * (nn * nn - 1));
}

}  // namespace scd::testing
