#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gridfuzz/fuzzy.hpp"

using namespace gridfuzz;

namespace {

FuzzyTrapezoid random_nonnegative(std::mt19937_64& rng, double hi = 100.0) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  double v[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
  std::sort(v, v + 4);
  return {v[0], v[1], v[2], v[3]};
}

// Interval product endpoints by brute-force enumeration of the four corner
// products; the oracle for the alpha-cut property.
std::pair<double, double> interval_product(double lo1, double hi1, double lo2,
                                           double hi2) {
  const double c[4] = {lo1 * lo2, lo1 * hi2, hi1 * lo2, hi1 * hi2};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

TEST_CASE("construction rejects unordered or non-finite quadruples") {
  CHECK_THROWS_AS(FuzzyTrapezoid(1, 0, 2, 3), InvalidTrapezoid);
  CHECK_THROWS_AS(FuzzyTrapezoid(1, 2, 5, 3), InvalidTrapezoid);
  CHECK_THROWS_AS(FuzzyTrapezoid(0, 0, 0, std::nan("")), InvalidTrapezoid);
  CHECK_NOTHROW(FuzzyTrapezoid(1, 1, 1, 1));
  CHECK(FuzzyTrapezoid(1, 2, 2, 3).is_triangular());
  CHECK(FuzzyTrapezoid::crisp(7).is_crisp());
}

TEST_CASE("membership of (1,2,3,4)") {
  const FuzzyTrapezoid t(1, 2, 3, 4);
  CHECK(t.membership(2.5) == 1.0);
  CHECK(t.membership(1.5) == 0.5);
  CHECK(t.membership(3.5) == 0.5);
  CHECK(t.membership(5.0) == 0.0);
}

TEST_CASE("membership hits the documented boundary values") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x_dist(-10.0, 110.0);
  for (int i = 0; i < 500; ++i) {
    const auto t = random_nonnegative(rng);
    CHECK(t.membership(t.a2()) == 1.0);
    CHECK(t.membership(t.a3()) == 1.0);
    if (t.a1() < t.a2()) {
      CHECK(t.membership(t.a1()) == 0.0);
    }
    if (t.a3() < t.a4()) {
      CHECK(t.membership(t.a4()) == 0.0);
    }
    for (int k = 0; k < 8; ++k) {
      const double mu = t.membership(x_dist(rng));
      CHECK(mu >= 0.0);
      CHECK(mu <= 1.0);
    }
  }
}

TEST_CASE("membership is continuous across nondegenerate ramps") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> x_dist(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    auto t = random_nonnegative(rng, 10.0);
    if (!(t.a1() < t.a2() && t.a3() < t.a4())) {
      continue;
    }
    // Lipschitz bound from the steeper ramp.
    const double lip = std::max(1.0 / (t.a2() - t.a1()), 1.0 / (t.a4() - t.a3()));
    const double h = 1e-9;
    for (int k = 0; k < 50; ++k) {
      const double x = t.a1() + x_dist(rng) * (t.a4() - t.a1());
      CHECK(std::abs(t.membership(x + h) - t.membership(x)) <= lip * h * 1.0001);
    }
  }
}

TEST_CASE("addition is componentwise") {
  CHECK(add(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid::crisp(2)) ==
        FuzzyTrapezoid(3, 4, 5, 6));
  CHECK(add(FuzzyTrapezoid::crisp(0), FuzzyTrapezoid(1, 2, 3, 4)) ==
        FuzzyTrapezoid(1, 2, 3, 4));
  const FuzzyTrapezoid a(0.8, 0.8, 1.1, 1.2);
  const FuzzyTrapezoid b(1.1, 1.2, 1.4, 1.5);
  const auto s = add(a, b);
  CHECK(s.a1() == 0.8 + 1.1);
  CHECK(s.a2() == 0.8 + 1.2);
  CHECK(s.a3() == 1.1 + 1.4);
  CHECK(s.a4() == 1.2 + 1.5);
  CHECK(s.a1() == doctest::Approx(1.9));
  CHECK(s.a4() == doctest::Approx(2.7));
}

TEST_CASE("subtraction is componentwise and validated") {
  CHECK(sub(FuzzyTrapezoid(5, 6, 7, 8), FuzzyTrapezoid(1, 2, 3, 4)) ==
        FuzzyTrapezoid::crisp(4));
  CHECK(sub(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid::crisp(0)) ==
        FuzzyTrapezoid(1, 2, 3, 4));
  // Componentwise differences can come out unordered even for valid
  // operands: (1,2,3,4) - (0,2,3,5) = (1,0,0,-1).
  CHECK_THROWS_AS(sub(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid(0, 2, 3, 5)),
                  NonMonotoneResult);
}

TEST_CASE("multiplication trace records the candidate sets and index transfer") {
  MultiplicationTrace trace;
  const auto p = mul(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid(2, 3, 4, 5), trace);
  CHECK(p == FuzzyTrapezoid(2, 6, 12, 20));
  CHECK(trace.t1 == std::array<double, 4>{2, 3, 4, 6});
  CHECK(trace.t2 == std::array<double, 4>{12, 15, 16, 20});
  CHECK(trace.k == 0);
  CHECK(trace.l == 3);
  CHECK(trace.product == std::array<double, 4>{2, 6, 12, 20});
}

TEST_CASE("multiplication identities and preconditions") {
  CHECK(mul(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid::crisp(1)) ==
        FuzzyTrapezoid(1, 2, 3, 4));
  CHECK(mul(FuzzyTrapezoid::crisp(0), FuzzyTrapezoid(1, 2, 3, 4)) ==
        FuzzyTrapezoid::crisp(0));
  CHECK_THROWS_AS(mul(FuzzyTrapezoid(-1, 0, 0, 1), FuzzyTrapezoid::crisp(1)),
                  NegativeOperand);
}

TEST_CASE("multiplication tie-break keeps zero-footed operands consistent") {
  // T1 is all zeros here; smallest index for k and largest for l keep the
  // upper endpoints at the interval product.
  MultiplicationTrace trace;
  const auto p = mul(FuzzyTrapezoid(0, 0, 1, 2), FuzzyTrapezoid(0, 0, 3, 4), trace);
  CHECK(trace.k == 0);
  CHECK(trace.l == 3);
  CHECK(p == FuzzyTrapezoid(0, 0, 3, 8));
}

TEST_CASE("division modes") {
  CHECK(div(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid::crisp(1),
            DivisionMode::paper) == FuzzyTrapezoid(1, 2, 3, 4));
  CHECK(div(FuzzyTrapezoid(1, 2, 3, 4), FuzzyTrapezoid::crisp(1),
            DivisionMode::interval_safe) == FuzzyTrapezoid(1, 2, 3, 4));

  const FuzzyTrapezoid a(2, 4, 6, 8);
  const FuzzyTrapezoid b(2, 2, 4, 4);
  // Componentwise quotient gives (1, 2, 1.5, 2), which is unordered.
  CHECK_THROWS_AS(div(a, b, DivisionMode::paper), NonMonotoneResult);
  CHECK(div(a, b, DivisionMode::interval_safe) == FuzzyTrapezoid(0.5, 1, 3, 4));

  CHECK_THROWS_AS(div(a, FuzzyTrapezoid(0, 1, 2, 3)), DivisorNotPositive);
  CHECK_THROWS_AS(div(FuzzyTrapezoid(-2, -1, 0, 1), b), NegativeOperand);
}

TEST_CASE("validity closure over random nonnegative operands") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_nonnegative(rng);
    const auto b = random_nonnegative(rng);
    CHECK_NOTHROW(add(a, b));
    CHECK_NOTHROW(mul(a, b));
  }
}

TEST_CASE("alpha-cut oracle for multiplication endpoints") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_nonnegative(rng);
    const auto b = random_nonnegative(rng);
    const auto p = mul(a, b);
    const auto outer = interval_product(a.a1(), a.a4(), b.a1(), b.a4());
    const auto core = interval_product(a.a2(), a.a3(), b.a2(), b.a3());
    CHECK(p.a1() == outer.first);
    CHECK(p.a4() == outer.second);
    CHECK(p.a2() == core.first);
    CHECK(p.a3() == core.second);
  }
}

TEST_CASE("crisp operands degenerate to real arithmetic") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    const double y = dist(rng);
    const auto cx = FuzzyTrapezoid::crisp(x);
    const auto cy = FuzzyTrapezoid::crisp(y);
    CHECK(add(cx, cy) == FuzzyTrapezoid::crisp(x + y));
    CHECK(mul(cx, cy) == FuzzyTrapezoid::crisp(x * y));
    CHECK(div(cx, cy, DivisionMode::paper) == FuzzyTrapezoid::crisp(x / y));
    CHECK(div(cx, cy, DivisionMode::interval_safe) == FuzzyTrapezoid::crisp(x / y));
    if (x >= y) {
      CHECK(sub(cx, cy) == FuzzyTrapezoid::crisp(x - y));
    }
  }
}

TEST_CASE("analytic mean of maximum is the plateau midpoint") {
  CHECK(FuzzyTrapezoid(1, 2, 4, 5).mean_of_maximum() == 3.0);
  CHECK(FuzzyTrapezoid::crisp(7.25).mean_of_maximum() == 7.25);
}
