#include "gridfuzz/sampled.hpp"

#include <limits>

namespace gridfuzz {

namespace {

// Relative tolerance for "within the maximum": a sample counts as a
// maximizer when its grade reaches max * (1 - kMomTolerance).
constexpr double kMomTolerance = 1e-6;

double maximizer_threshold(double max_grade) {
  return max_grade * (1.0 - kMomTolerance);
}

}  // namespace

SampledFuzzySet::SampledFuzzySet(double lo, double hi, std::size_t resolution)
    : lo_(lo), hi_(hi) {
  if (!(lo < hi)) {
    throw Error("sampled set needs a non-degenerate domain");
  }
  if (resolution < 2) {
    throw Error("sampled set needs at least 2 samples");
  }
  step_ = (hi - lo) / static_cast<double>(resolution - 1);
  grades_.assign(resolution, 0.0);
}

SampledFuzzySet SampledFuzzySet::of(const FuzzyTrapezoid& t, double lo,
                                    double hi, std::size_t resolution) {
  SampledFuzzySet s(lo, hi, resolution);
  kernels::active_backend().fill_membership(s.grades_.data(), s.lo_, s.step_,
                                            s.grades_.size(), t.params());
  return s;
}

void SampledFuzzySet::fold_max_scaled(const FuzzyTrapezoid& t, double strength) {
  if (strength <= 0.0) {
    return;
  }
  kernels::active_backend().fold_max_scaled(grades_.data(), lo_, step_,
                                            grades_.size(), t.params(), strength);
}

void SampledFuzzySet::fold_max_clipped(const FuzzyTrapezoid& t, double strength) {
  if (strength <= 0.0) {
    return;
  }
  kernels::active_backend().fold_max_clipped(grades_.data(), lo_, step_,
                                             grades_.size(), t.params(), strength);
}

double SampledFuzzySet::max_grade() const {
  return kernels::active_backend().reduce_max(grades_.data(), grades_.size());
}

double SampledFuzzySet::mean_of_maximum() const {
  const double m = max_grade();
  if (m <= 0.0) {
    throw EmptySetError("mean of maximum over an all-zero set");
  }
  const auto stats = kernels::active_backend().stats_at_or_above(
      grades_.data(), grades_.size(), maximizer_threshold(m));
  return lo_ + step_ * (static_cast<double>(stats.index_sum) /
                        static_cast<double>(stats.count));
}

FuzzyTrapezoid SampledFuzzySet::bounding_trapezoid() const {
  const double m = max_grade();
  if (m <= 0.0) {
    throw EmptySetError("bounding trapezoid of an all-zero set");
  }
  const auto& be = kernels::active_backend();
  // Any strictly positive grade is support; >= denorm_min is equivalent to
  // > 0 for nonnegative grades and reuses the same kernel.
  const auto support = be.stats_at_or_above(
      grades_.data(), grades_.size(), std::numeric_limits<double>::denorm_min());
  const auto peak = be.stats_at_or_above(grades_.data(), grades_.size(),
                                         maximizer_threshold(m));
  return {abscissa(static_cast<std::size_t>(support.first)),
          abscissa(static_cast<std::size_t>(peak.first)),
          abscissa(static_cast<std::size_t>(peak.last)),
          abscissa(static_cast<std::size_t>(support.last))};
}

}  // namespace gridfuzz
