#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gridfuzz/kernels.hpp"

using namespace gridfuzz::kernels;

namespace {

TrapezoidParams random_trapezoid(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
  std::sort(v, v + 4);
  return {v[0], v[1], v[2], v[3]};
}

struct GridCase {
  double lo;
  double step;
  std::size_t n;
  TrapezoidParams t;
};

GridCase random_grid_case(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lo_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> span_dist(0.5, 20.0);
  std::uniform_int_distribution<std::size_t> n_dist(2, 1200);
  const double lo = lo_dist(rng);
  const double span = span_dist(rng);
  const std::size_t n = n_dist(rng);
  GridCase c;
  c.lo = lo;
  c.n = n;
  c.step = span / static_cast<double>(n - 1);
  c.t = random_trapezoid(rng, lo - 1.0, lo + span + 1.0);
  // Degenerate shapes must be covered too.
  std::uniform_int_distribution<int> degen(0, 9);
  const int d = degen(rng);
  if (d == 0) {
    c.t.a2 = c.t.a1;
  } else if (d == 1) {
    c.t.a3 = c.t.a4;
  } else if (d == 2) {
    c.t = {c.t.a1, c.t.a1, c.t.a1, c.t.a1};
  }
  return c;
}

}  // namespace

TEST_CASE("membership_point matches the documented piecewise form") {
  const TrapezoidParams t{1, 2, 3, 4};
  CHECK(membership_point(t, 0.5) == 0.0);
  CHECK(membership_point(t, 1.0) == 0.0);
  CHECK(membership_point(t, 1.5) == 0.5);
  CHECK(membership_point(t, 2.0) == 1.0);
  CHECK(membership_point(t, 2.5) == 1.0);
  CHECK(membership_point(t, 3.0) == 1.0);
  CHECK(membership_point(t, 3.5) == 0.5);
  CHECK(membership_point(t, 4.0) == 0.0);
  CHECK(membership_point(t, 5.0) == 0.0);
}

TEST_CASE("membership_point handles degenerate ramps as steps") {
  const TrapezoidParams left_step{2, 2, 3, 4};
  CHECK(membership_point(left_step, 2.0) == 1.0);
  CHECK(membership_point(left_step, 1.9999) == 0.0);
  const TrapezoidParams right_step{1, 2, 3, 3};
  CHECK(membership_point(right_step, 3.0) == 1.0);
  CHECK(membership_point(right_step, 3.0001) == 0.0);
  const TrapezoidParams crisp{5, 5, 5, 5};
  CHECK(membership_point(crisp, 5.0) == 1.0);
  CHECK(membership_point(crisp, 4.9999) == 0.0);
  CHECK(membership_point(crisp, 5.0001) == 0.0);
}

TEST_CASE("scalar stats kernel matches a naive rescan") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> g_dist(0.0, 1.0);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 300);
    const std::size_t n = n_dist(rng);
    std::vector<double> g(n);
    for (auto& v : g) {
      v = g_dist(rng);
    }
    const double threshold = g_dist(rng);
    const auto s = scalar_backend().stats_at_or_above(g.data(), n, threshold);

    GradeStats naive;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] >= threshold) {
        naive.count++;
        naive.index_sum += i;
        if (naive.first < 0) naive.first = static_cast<std::int64_t>(i);
        naive.last = static_cast<std::int64_t>(i);
      }
    }
    CHECK(s.count == naive.count);
    CHECK(s.index_sum == naive.index_sum);
    CHECK(s.first == naive.first);
    CHECK(s.last == naive.last);
  }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  if (!avx2_supported()) {
    MESSAGE("AVX2 not available on this host; dispatcher stays on scalar");
    return;
  }
  const Backend& sc = scalar_backend();
  const Backend& vx = avx2_backend();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> s_dist(0.0, 1.0);

  for (int iter = 0; iter < 400; ++iter) {
    const GridCase c = random_grid_case(rng);

    std::vector<double> a(c.n), b(c.n);
    sc.fill_membership(a.data(), c.lo, c.step, c.n, c.t);
    vx.fill_membership(b.data(), c.lo, c.step, c.n, c.t);
    for (std::size_t i = 0; i < c.n; ++i) {
      REQUIRE(a[i] == b[i]);
    }

    // Fold into independent accumulators seeded with the same random state.
    std::vector<double> acc_s(c.n), acc_v(c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
      acc_s[i] = s_dist(rng);
      acc_v[i] = acc_s[i];
    }
    const double strength = s_dist(rng);
    sc.fold_max_scaled(acc_s.data(), c.lo, c.step, c.n, c.t, strength);
    vx.fold_max_scaled(acc_v.data(), c.lo, c.step, c.n, c.t, strength);
    for (std::size_t i = 0; i < c.n; ++i) {
      REQUIRE(acc_s[i] == acc_v[i]);
    }

    sc.fold_max_clipped(acc_s.data(), c.lo, c.step, c.n, c.t, strength);
    vx.fold_max_clipped(acc_v.data(), c.lo, c.step, c.n, c.t, strength);
    for (std::size_t i = 0; i < c.n; ++i) {
      REQUIRE(acc_s[i] == acc_v[i]);
    }

    REQUIRE(sc.reduce_max(acc_s.data(), c.n) == vx.reduce_max(acc_v.data(), c.n));

    const double max = sc.reduce_max(acc_s.data(), c.n);
    for (const double threshold :
         {0.0, max * (1.0 - 1e-6), max, s_dist(rng), acc_s[c.n / 2]}) {
      const auto ss = sc.stats_at_or_above(acc_s.data(), c.n, threshold);
      const auto sv = vx.stats_at_or_above(acc_v.data(), c.n, threshold);
      REQUIRE(ss.count == sv.count);
      REQUIRE(ss.index_sum == sv.index_sum);
      REQUIRE(ss.first == sv.first);
      REQUIRE(ss.last == sv.last);
    }
  }
}

TEST_CASE("backend dispatch exposes a named backend and honours overrides") {
  const Backend& original = active_backend();
  CHECK((std::string(original.name) == "scalar" ||
         std::string(original.name) == "avx2"));

  set_active_backend(scalar_backend());
  CHECK(std::string(active_backend().name) == "scalar");
  set_active_backend(original);
}
