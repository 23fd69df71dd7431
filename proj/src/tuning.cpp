#include "scd/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <json.hpp>

#include "scd/error.hpp"

namespace scd {

namespace {

// 53-bit uniform in [0, 1). std::uniform_real_distribution is not specified
// bit-for-bit across standard libraries; mt19937_64 is.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Zero-mean GP regression on [0, 1] with a squared-exponential kernel, fitted
// to centred observations.
class GaussianProcess1D {
 public:
  GaussianProcess1D(const std::vector<double>& x, const std::vector<double>& y)
      : x_(x), mean_(0.0) {
    const auto n = static_cast<Eigen::Index>(x.size());
    for (double v : y) mean_ += v;
    mean_ /= static_cast<double>(y.size());
    double var = 0.0;
    for (double v : y) var += (v - mean_) * (v - mean_);
    var /= static_cast<double>(y.size());
    signal_var_ = std::max(var, kMinSignalVar);

    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = kernel(x[i], x[j]);
      gram(i, i) += kNoise * signal_var_;
    }
    chol_.compute(gram);
    Eigen::VectorXd centred(n);
    for (Eigen::Index i = 0; i < n; ++i) centred(i) = y[static_cast<std::size_t>(i)] - mean_;
    alpha_ = chol_.solve(centred);
  }

  // Posterior mean and standard deviation at `at`.
  std::pair<double, double> predict(double at) const {
    const auto n = static_cast<Eigen::Index>(x_.size());
    Eigen::VectorXd cross(n);
    for (Eigen::Index i = 0; i < n; ++i) cross(i) = kernel(at, x_[static_cast<std::size_t>(i)]);
    double mu = mean_ + cross.dot(alpha_);
    double var = signal_var_ - cross.dot(chol_.solve(cross));
    return {mu, std::sqrt(std::max(var, 0.0))};
  }

 private:
  static constexpr double kLengthScale = 0.15;
  static constexpr double kNoise = 1e-6;
  static constexpr double kMinSignalVar = 1e-2;

  double kernel(double a, double b) const {
    double d = (a - b) / kLengthScale;
    return signal_var_ * std::exp(-0.5 * d * d);
  }

  std::vector<double> x_;
  double mean_;
  double signal_var_ = 1.0;
  Eigen::LLT<Eigen::MatrixXd> chol_;
  Eigen::VectorXd alpha_;
};

double expected_improvement(double mu, double sigma, double best) {
  if (sigma <= 0.0) return std::max(mu - best, 0.0);
  double z = (mu - best) / sigma;
  return (mu - best) * normal_cdf(z) + sigma * normal_pdf(z);
}

void check_validation(std::span<const ValidationItem> validation) {
  if (validation.size() < 2) {
    throw ValidationError("validation set needs at least 2 items, got " +
                          std::to_string(validation.size()));
  }
  bool has_changed = false;
  bool has_stable = false;
  for (const auto& item : validation) {
    if (!std::isfinite(item.score)) {
      throw ValidationError("non-finite score for \"" + item.lemma + "\"");
    }
    (item.gold == ChangeLabel::changed ? has_changed : has_stable) = true;
  }
  if (!has_changed || !has_stable) {
    throw ValidationError("validation set contains a single class; both changed and stable "
                          "items are required");
  }
}

}  // namespace

void TuningOptions::validate() const {
  if (repeats == 0) throw ValidationError("repeats must be at least 1");
  if (trials_per_repeat == 0) throw ValidationError("trials per repeat must be at least 1");
}

double accuracy_at(std::span<const ValidationItem> validation, double threshold) {
  if (validation.empty()) throw ValidationError("accuracy of an empty validation set");
  std::size_t correct = 0;
  for (const auto& item : validation) {
    bool predicted = item.score > threshold;
    if (predicted == (item.gold == ChangeLabel::changed)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(validation.size());
}

RepeatOutcome search_threshold(std::span<const ValidationItem> validation, std::uint64_t seed,
                               std::size_t trials, std::size_t initial_trials) {
  if (validation.empty()) throw ValidationError("empty validation set");
  if (trials == 0) throw ValidationError("trials must be at least 1");

  std::vector<double> distinct;
  distinct.reserve(validation.size());
  for (const auto& item : validation) distinct.push_back(item.score);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const double lo = distinct.front();
  const double hi = distinct.back();

  RepeatOutcome outcome{seed, lo, accuracy_at(validation, lo), 1};
  if (lo == hi) return outcome;

  // accuracy_at is piecewise constant: every t in [u_i, u_{i+1}) behaves the
  // same, and t == hi is its own cell. One representative per cell.
  const std::size_t cells = distinct.size();
  std::vector<double> representative(cells);
  for (std::size_t i = 0; i + 1 < cells; ++i) {
    representative[i] = 0.5 * (distinct[i] + distinct[i + 1]);
  }
  representative[cells - 1] = hi;
  auto cell_of = [&](double t) {
    return static_cast<std::size_t>(std::upper_bound(distinct.begin(), distinct.end(), t) -
                                    distinct.begin()) - 1;
  };
  const double width = hi - lo;
  auto to_unit = [&](double t) { return (t - lo) / width; };

  std::mt19937_64 rng(seed);
  std::vector<bool> visited(cells, false);
  std::size_t visited_count = 0;
  std::vector<double> xs;
  std::vector<double> ys;
  outcome.trials = 0;
  outcome.accuracy = -1.0;

  for (std::size_t trial = 0; trial < trials && visited_count < cells; ++trial) {
    double t;
    if (trial < initial_trials) {
      t = std::min(hi, lo + uniform01(rng) * width);
    } else {
      GaussianProcess1D gp(xs, ys);
      double best_y = *std::max_element(ys.begin(), ys.end());
      double best_ei = -1.0;
      std::size_t pick = cells;
      for (std::size_t c = 0; c < cells; ++c) {
        if (visited[c]) continue;
        auto [mu, sigma] = gp.predict(to_unit(representative[c]));
        double ei = expected_improvement(mu, sigma, best_y);
        if (ei > best_ei) {
          best_ei = ei;
          pick = c;
        }
      }
      t = representative[pick];
    }
    auto cell = cell_of(t);
    if (!visited[cell]) {
      visited[cell] = true;
      ++visited_count;
    }
    double acc = accuracy_at(validation, t);
    xs.push_back(to_unit(t));
    ys.push_back(acc);
    ++outcome.trials;
    if (acc > outcome.accuracy) {
      outcome.accuracy = acc;
      outcome.threshold = t;
    }
  }
  return outcome;
}

TuningResult tune(std::span<const ValidationItem> validation, Measure measure,
                  const TuningOptions& options) {
  options.validate();
  check_validation(validation);
  TuningResult result;
  double sum = 0.0;
  for (std::size_t r = 0; r < options.repeats; ++r) {
    auto outcome = search_threshold(validation, options.base_seed + r,
                                     options.trials_per_repeat, options.initial_trials);
    sum += outcome.threshold;
    result.repeats.push_back(outcome);
  }
  auto& cfg = result.config;
  cfg.measure = measure;
  cfg.threshold = sum / static_cast<double>(options.repeats);
  cfg.repeats = options.repeats;
  cfg.trials_per_repeat = options.trials_per_repeat;
  cfg.base_seed = options.base_seed;
  cfg.validation_accuracy = accuracy_at(validation, cfg.threshold);
  return result;
}

void write_threshold_json(std::ostream& out, const ThresholdConfig& config) {
  nlohmann::ordered_json doc{
      {"measure", std::string(to_string(config.measure))},
      {"threshold", config.threshold},
      {"repeats", config.repeats},
      {"trials_per_repeat", config.trials_per_repeat},
      {"base_seed", config.base_seed},
      {"validation_accuracy", config.validation_accuracy},
  };
  out << doc.dump(2) << '\n';
}

ThresholdConfig read_threshold_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    ThresholdConfig cfg;
    auto measure = parse_measure(doc.at("measure").get<std::string>());
    if (!measure) throw FormatError(path.string() + ": unknown measure");
    cfg.measure = *measure;
    cfg.threshold = doc.at("threshold").get<double>();
    cfg.repeats = doc.at("repeats").get<std::size_t>();
    cfg.trials_per_repeat = doc.at("trials_per_repeat").get<std::size_t>();
    cfg.base_seed = doc.at("base_seed").get<std::uint64_t>();
    cfg.validation_accuracy = doc.at("validation_accuracy").get<double>();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": invalid threshold file (" + e.what() + ")");
  }
}

}  // namespace scd
