#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gridfuzz/fuzzy.hpp"

namespace gridfuzz {

/// A fuzzy set sampled on a uniform grid over a closed domain. This is the
/// carrier for aggregated inference outputs before defuzzification; all the
/// per-sample work runs through the kernel backends.
class SampledFuzzySet {
 public:
  static constexpr std::size_t kDefaultResolution = 1001;

  /// All-zero grades over [lo, hi] with `resolution` samples (>= 2).
  SampledFuzzySet(double lo, double hi, std::size_t resolution);

  static SampledFuzzySet of(const FuzzyTrapezoid& t, double lo, double hi,
                            std::size_t resolution = kDefaultResolution);

  /// acc = max(acc, strength * membership): product implication.
  void fold_max_scaled(const FuzzyTrapezoid& t, double strength);
  /// acc = max(acc, min(membership, strength)): clip implication.
  void fold_max_clipped(const FuzzyTrapezoid& t, double strength);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double step() const { return step_; }
  std::size_t resolution() const { return grades_.size(); }
  std::span<const double> grades() const { return grades_; }
  double abscissa(std::size_t i) const {
    return lo_ + static_cast<double>(i) * step_;
  }

  double max_grade() const;
  bool empty() const { return max_grade() <= 0.0; }

  /// Mean of maximum: average abscissa of the samples whose grade is within
  /// a relative tolerance of the peak. Throws EmptySetError when no sample
  /// has a positive grade.
  double mean_of_maximum() const;

  /// Tightest trapezoid around the set: feet at the support extremes, plateau
  /// spanning the maximizing samples. Throws EmptySetError on empty sets.
  FuzzyTrapezoid bounding_trapezoid() const;

 private:
  double lo_;
  double hi_;
  double step_;
  std::vector<double> grades_;
};

inline double defuzz_mom(const SampledFuzzySet& s) { return s.mean_of_maximum(); }

}  // namespace gridfuzz
