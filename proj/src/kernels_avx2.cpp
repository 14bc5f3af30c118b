#include "gridfuzz/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define GRIDFUZZ_HAVE_AVX2_TU 1
#include <immintrin.h>

#include <bit>
#include <cstdint>
#endif

namespace gridfuzz::kernels {

#if GRIDFUZZ_HAVE_AVX2_TU

namespace {

// Lane offsets {0,1,2,3} as doubles; exact for any base index below 2^52.
inline __m256d lane_indices(std::size_t i) {
  const __m256d base = _mm256_set1_pd(static_cast<double>(i));
  const __m256d offs = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  return _mm256_add_pd(base, offs);
}

// Branchless mirror of membership_point(): the rising and falling ramps are
// computed speculatively with the exact same subtract/divide sequence and
// blended in; lanes outside the support are zeroed last. Division by zero in
// an unselected lane is harmless because blends pick per lane.
inline __m256d membership_lanes(__m256d x, const TrapezoidParams& t) {
  const __m256d a1 = _mm256_set1_pd(t.a1);
  const __m256d a2 = _mm256_set1_pd(t.a2);
  const __m256d a3 = _mm256_set1_pd(t.a3);
  const __m256d a4 = _mm256_set1_pd(t.a4);
  const __m256d one = _mm256_set1_pd(1.0);

  const __m256d rise = _mm256_div_pd(_mm256_sub_pd(x, a1), _mm256_sub_pd(a2, a1));
  const __m256d fall = _mm256_div_pd(_mm256_sub_pd(a4, x), _mm256_sub_pd(a4, a3));

  const __m256d le_a3 = _mm256_cmp_pd(x, a3, _CMP_LE_OQ);
  const __m256d lt_a2 = _mm256_cmp_pd(x, a2, _CMP_LT_OQ);
  const __m256d outside = _mm256_or_pd(_mm256_cmp_pd(x, a1, _CMP_LT_OQ),
                                       _mm256_cmp_pd(x, a4, _CMP_GT_OQ));

  __m256d mu = fall;
  mu = _mm256_blendv_pd(mu, one, le_a3);
  mu = _mm256_blendv_pd(mu, rise, lt_a2);
  return _mm256_andnot_pd(outside, mu);
}

void fill_membership_avx2(double* out, double lo, double step, std::size_t n,
                          const TrapezoidParams& t) {
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vstep = _mm256_set1_pd(step);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_add_pd(vlo, _mm256_mul_pd(lane_indices(i), vstep));
    _mm256_storeu_pd(out + i, membership_lanes(x, t));
  }
  for (; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    out[i] = membership_point(t, x);
  }
}

void fold_max_scaled_avx2(double* acc, double lo, double step, std::size_t n,
                          const TrapezoidParams& t, double strength) {
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vstep = _mm256_set1_pd(step);
  const __m256d vs = _mm256_set1_pd(strength);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_add_pd(vlo, _mm256_mul_pd(lane_indices(i), vstep));
    const __m256d v = _mm256_mul_pd(vs, membership_lanes(x, t));
    const __m256d a = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_max_pd(a, v));
  }
  for (; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double v = strength * membership_point(t, x);
    if (v > acc[i]) {
      acc[i] = v;
    }
  }
}

void fold_max_clipped_avx2(double* acc, double lo, double step, std::size_t n,
                           const TrapezoidParams& t, double strength) {
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vstep = _mm256_set1_pd(step);
  const __m256d vs = _mm256_set1_pd(strength);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_add_pd(vlo, _mm256_mul_pd(lane_indices(i), vstep));
    const __m256d v = _mm256_min_pd(membership_lanes(x, t), vs);
    const __m256d a = _mm256_loadu_pd(acc + i);
    _mm256_storeu_pd(acc + i, _mm256_max_pd(a, v));
  }
  for (; i < n; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    const double mu = membership_point(t, x);
    const double v = mu < strength ? mu : strength;
    if (v > acc[i]) {
      acc[i] = v;
    }
  }
}

double reduce_max_avx2(const double* grades, std::size_t n) {
  if (n < 8) {
    return scalar_backend().reduce_max(grades, n);
  }
  __m256d vmax = _mm256_loadu_pd(grades);
  std::size_t i = 4;
  for (; i + 4 <= n; i += 4) {
    vmax = _mm256_max_pd(vmax, _mm256_loadu_pd(grades + i));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vmax);
  double m = lanes[0];
  for (int k = 1; k < 4; ++k) {
    if (lanes[k] > m) {
      m = lanes[k];
    }
  }
  for (; i < n; ++i) {
    if (grades[i] > m) {
      m = grades[i];
    }
  }
  return m;
}

GradeStats stats_at_or_above_avx2(const double* grades, std::size_t n,
                                  double threshold) {
  // Sum of set-bit positions per 4-bit movemask value.
  static constexpr std::uint64_t kBitSum[16] = {0, 0, 1, 1, 2, 2, 3, 3,
                                                3, 3, 4, 4, 5, 5, 6, 6};
  GradeStats s;
  const __m256d vt = _mm256_set1_pd(threshold);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d g = _mm256_loadu_pd(grades + i);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(g, vt, _CMP_GE_OQ));
    if (mask != 0) {
      const auto bits = static_cast<unsigned>(mask);
      const auto pop = static_cast<std::uint64_t>(std::popcount(bits));
      s.count += pop;
      s.index_sum += static_cast<std::uint64_t>(i) * pop + kBitSum[bits];
      if (s.first < 0) {
        s.first = static_cast<std::int64_t>(i + std::countr_zero(bits));
      }
      s.last = static_cast<std::int64_t>(i + std::bit_width(bits) - 1);
    }
  }
  for (; i < n; ++i) {
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

const Backend& avx2_backend() {
  static const Backend backend{
      "avx2",
      &fill_membership_avx2,
      &fold_max_scaled_avx2,
      &fold_max_clipped_avx2,
      &reduce_max_avx2,
      &stats_at_or_above_avx2,
  };
  return backend;
}

#else  // non-x86 build: keep the symbol, dispatch never selects it

const Backend& avx2_backend() { return scalar_backend(); }

#endif

}  // namespace gridfuzz::kernels
