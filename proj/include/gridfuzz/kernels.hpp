#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the engine: evaluating a trapezoidal
// membership function over a uniform grid, folding scaled/clipped terms into
// an aggregate with pointwise max, and the reductions used by
// mean-of-maximum defuzzification.
//
// Every kernel has a scalar reference implementation and may have SIMD
// variants. A variant is only acceptable if it is bit-identical to the
// reference: same IEEE operations in the same per-element order, integer
// reductions where summation order would otherwise matter. The dispatcher
// picks the widest supported backend at runtime; GRIDFUZZ_KERNELS=scalar|avx2
// overrides it.

namespace gridfuzz::kernels {

struct TrapezoidParams {
  double a1;
  double a2;
  double a3;
  double a4;
};

/// Reference piecewise-linear membership evaluation. SIMD backends must
/// reproduce this bit for bit (same subtract/divide sequence, branch
/// conditions expressed as blends).
inline double membership_point(const TrapezoidParams& t, double x) {
  if (x < t.a1 || x > t.a4) {
    return 0.0;
  }
  if (x < t.a2) {
    return (x - t.a1) / (t.a2 - t.a1);
  }
  if (x <= t.a3) {
    return 1.0;
  }
  return (t.a4 - x) / (t.a4 - t.a3);
}

/// Single-pass statistics over grades at or above a threshold. Index sums
/// are integers, so they are exact under any evaluation order.
struct GradeStats {
  std::uint64_t count = 0;
  std::uint64_t index_sum = 0;
  std::int64_t first = -1;
  std::int64_t last = -1;
};

using FillFn = void (*)(double* out, double lo, double step, std::size_t n,
                        const TrapezoidParams& t);
using FoldFn = void (*)(double* acc, double lo, double step, std::size_t n,
                        const TrapezoidParams& t, double strength);
using ReduceMaxFn = double (*)(const double* grades, std::size_t n);
using StatsFn = GradeStats (*)(const double* grades, std::size_t n, double threshold);

struct Backend {
  const char* name;
  /// out[i] = membership(lo + i*step)
  FillFn fill_membership;
  /// acc[i] = max(acc[i], strength * membership(lo + i*step))
  FoldFn fold_max_scaled;
  /// acc[i] = max(acc[i], min(membership(lo + i*step), strength))
  FoldFn fold_max_clipped;
  ReduceMaxFn reduce_max;
  /// count/index_sum/first/last over {i : grades[i] >= threshold}
  StatsFn stats_at_or_above;
};

const Backend& scalar_backend();
const Backend& avx2_backend();  // falls back to scalar off x86-64
bool avx2_supported();

/// Backend chosen at startup (env override honoured), swappable in tests.
const Backend& active_backend();
void set_active_backend(const Backend& backend);

}  // namespace gridfuzz::kernels
