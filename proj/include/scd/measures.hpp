#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "scd/distribution.hpp"

namespace scd {

enum class Measure { kl, js, bray_curtis, canberra, chebyshev, cosine, euclidean };

inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::kl,        Measure::js,     Measure::bray_curtis, Measure::canberra,
    Measure::chebyshev, Measure::cosine, Measure::euclidean,
};

// Stable lowercase names used in flags and report columns.
std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

bool is_symmetric(Measure m);

struct SmoothingConfig {
  double epsilon = 1e-10;

  void validate() const;
};

// All measures take two equally long probability vectors over a shared
// support and throw ValidationError on a length mismatch or a non-finite
// component. Divergences are in nats.

// KL(p1 || p2) after adding epsilon to every component of both vectors and
// renormalizing.
double kl(std::span<const double> p1, std::span<const double> p2,
          const SmoothingConfig& smoothing = {});

// 0.5 KL(p1 || q) + 0.5 KL(p2 || q), q the midpoint; 0 ln 0 = 0, no smoothing.
double js(std::span<const double> p1, std::span<const double> p2);

double bray_curtis(std::span<const double> p1, std::span<const double> p2);

// Terms where both components are 0 contribute 0.
double canberra(std::span<const double> p1, std::span<const double> p2);

double chebyshev(std::span<const double> p1, std::span<const double> p2);

// Throws ValidationError when either vector has zero norm.
double cosine_distance(std::span<const double> p1, std::span<const double> p2);

double euclidean(std::span<const double> p1, std::span<const double> p2);

double compare(std::span<const double> p1, std::span<const double> p2, Measure measure,
               const SmoothingConfig& smoothing = {});

inline double compare(const AlignedPair& pair, Measure measure,
                      const SmoothingConfig& smoothing = {}) {
  return compare(pair.p1, pair.p2, measure, smoothing);
}

}  // namespace scd
