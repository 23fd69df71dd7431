#include "scd/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "scd/error.hpp"

namespace scd {

namespace {

void check_pair(std::span<const double> p1, std::span<const double> p2) {
  if (p1.size() != p2.size()) {
    throw ValidationError("distribution length mismatch (" + std::to_string(p1.size()) +
                          " vs " + std::to_string(p2.size()) + ")");
  }
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(p1.begin(), p1.end(), finite) || !std::all_of(p2.begin(), p2.end(), finite)) {
    throw ValidationError("non-finite component in distribution");
  }
}

// Sum of p ln(p / q) with 0 ln(0 / q) = 0.
double relative_entropy(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) sum += p[i] * std::log(p[i] / q[i]);
  }
  return sum;
}

std::vector<double> smoothed(std::span<const double> p, double epsilon) {
  std::vector<double> out(p.begin(), p.end());
  double total = 0.0;
  for (double& x : out) {
    x += epsilon;
    total += x;
  }
  for (double& x : out) x /= total;
  return out;
}

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kl: return "kl";
    case Measure::js: return "js";
    case Measure::bray_curtis: return "bray_curtis";
    case Measure::canberra: return "canberra";
    case Measure::chebyshev: return "chebyshev";
    case Measure::cosine: return "cosine";
    case Measure::euclidean: return "euclidean";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (auto m : kAllMeasures) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool is_symmetric(Measure m) { return m != Measure::kl; }

void SmoothingConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("smoothing epsilon must be a positive finite number");
  }
}

double kl(std::span<const double> p1, std::span<const double> p2,
          const SmoothingConfig& smoothing) {
  check_pair(p1, p2);
  smoothing.validate();
  auto a = smoothed(p1, smoothing.epsilon);
  auto b = smoothed(p2, smoothing.epsilon);
  return std::max(0.0, relative_entropy(a, b));
}

double js(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  std::vector<double> mid(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) mid[i] = 0.5 * (p1[i] + p2[i]);
  return std::max(0.0, 0.5 * relative_entropy(p1, mid) + 0.5 * relative_entropy(p2, mid));
}

double bray_curtis(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    num += std::abs(p1[i] - p2[i]);
    den += std::abs(p1[i] + p2[i]);
  }
  return den > 0.0 ? num / den : 0.0;
}

double canberra(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    double den = std::abs(p1[i]) + std::abs(p2[i]);
    if (den > 0.0) sum += std::abs(p1[i] - p2[i]) / den;
  }
  return sum;
}

double chebyshev(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  double best = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) best = std::max(best, std::abs(p1[i] - p2[i]));
  return best;
}

double cosine_distance(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  double dot = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    dot += p1[i] * p2[i];
    n1 += p1[i] * p1[i];
    n2 += p2[i] * p2[i];
  }
  if (n1 == 0.0 || n2 == 0.0) throw ValidationError("cosine distance of a zero vector");
  return std::max(0.0, 1.0 - dot / std::sqrt(n1 * n2));
}

double euclidean(std::span<const double> p1, std::span<const double> p2) {
  check_pair(p1, p2);
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    double d = p1[i] - p2[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double compare(std::span<const double> p1, std::span<const double> p2, Measure measure,
               const SmoothingConfig& smoothing) {
  switch (measure) {
    case Measure::kl: return kl(p1, p2, smoothing);
    case Measure::js: return js(p1, p2);
    case Measure::bray_curtis: return bray_curtis(p1, p2);
    case Measure::canberra: return canberra(p1, p2);
    case Measure::chebyshev: return chebyshev(p1, p2);
    case Measure::cosine: return cosine_distance(p1, p2);
    case Measure::euclidean: return euclidean(p1, p2);
  }
  throw ValidationError("unknown measure");
}

}  // namespace scd
