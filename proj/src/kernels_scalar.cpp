#include "gridfuzz/kernels.hpp"

// Reference kernels. Written so that each element is computed independently
// from its index (x = lo + i*step, never an accumulated x), which is the
// contract the SIMD variants replicate lane by lane.

namespace gridfuzz::kernels {
namespace {

void fill_membership_scalar(double* out, double lo, double step, std::size_t n,
                            const TrapezoidParams& t) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    out[i] = membership_point(t, x);
  }
}

void fold_max_scaled_scalar(double* acc, double lo, double step, std::size_t n,
                            const TrapezoidParams& t, double strength) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = strength * membership_point(t, x);
    if (v > acc[i]) {
      acc[i] = v;
    }
  }
}

void fold_max_clipped_scalar(double* acc, double lo, double step, std::size_t n,
                             const TrapezoidParams& t, double strength) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double mu = membership_point(t, x);
    const double v = mu < strength ? mu : strength;
    if (v > acc[i]) {
      acc[i] = v;
    }
  }
}

double reduce_max_scalar(const double* grades, std::size_t n) {
  double m = 0.0;
  if (n > 0) {
    m = grades[0];
    for (std::size_t i = 1; i < n; ++i) {
      if (grades[i] > m) {
        m = grades[i];
      }
    }
  }
  return m;
}

GradeStats stats_at_or_above_scalar(const double* grades, std::size_t n,
                                    double threshold) {
  GradeStats s;
  for (std::size_t i = 0; i < n; ++i) {
    if (grades[i] >= threshold) {
      s.count += 1;
      s.index_sum += i;
      if (s.first < 0) {
        s.first = static_cast<std::int64_t>(i);
      }
      s.last = static_cast<std::int64_t>(i);
    }
  }
  return s;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",
      &fill_membership_scalar,
      &fold_max_scaled_scalar,
      &fold_max_clipped_scalar,
      &reduce_max_scalar,
      &stats_at_or_above_scalar,
  };
  return backend;
}

}  // namespace gridfuzz::kernels
