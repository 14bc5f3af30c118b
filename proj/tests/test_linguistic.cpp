#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "gridfuzz/linguistic.hpp"

using namespace gridfuzz;

namespace {

void check_shape(const LinguisticVariable& v, const char* label, double a1,
                 double a2, double a3, double a4) {
  const auto* t = v.find_term(label);
  REQUIRE(t != nullptr);
  CHECK(t->shape == FuzzyTrapezoid(a1, a2, a3, a4));
}

}  // namespace

TEST_CASE("builtin catalog has the expected variables and shapes") {
  const auto cat = Catalog::builtin();
  CHECK(cat.variables().size() == 10);

  const auto& age = cat.variable(kLineAge);
  CHECK(age.terms().size() == 3);
  check_shape(age, "young", 0, 0, 4, 8);
  check_shape(age, "middle-aged", 4, 8, 18, 22);
  check_shape(age, "old", 18, 22, 30, 30);

  const auto& exposure = cat.variable(kLineExposure);
  check_shape(exposure, "low", 0, 0, 20, 40);
  check_shape(exposure, "average", 20, 40, 60, 80);
  check_shape(exposure, "high", 60, 80, 100, 100);

  const auto& weather = cat.variable(kWeather);
  check_shape(weather, "normal", 0, 0, 30, 80);
  check_shape(weather, "adverse", 30, 80, 100, 100);

  const auto& rate = cat.variable(kLineFailureRate);
  CHECK(rate.terms().size() == 5);
  check_shape(rate, "very-low", 0.8, 0.8, 1.1, 1.2);
  check_shape(rate, "low", 1.1, 1.2, 1.4, 1.5);
  check_shape(rate, "average", 1.4, 1.5, 1.9, 2.0);
  check_shape(rate, "high", 1.9, 2.0, 2.4, 2.5);
  check_shape(rate, "very-high", 2.4, 2.5, 3.0, 3.0);

  const auto& repair = cat.variable(kLineRepairTime);
  check_shape(repair, "good", 4, 4, 5, 6);
  check_shape(repair, "suitable", 5, 6, 7, 9);
  check_shape(repair, "bad", 7, 9, 12, 15);
  check_shape(repair, "very-bad", 12, 15, 20, 20);

  const auto& xage = cat.variable(kXfmrAge);
  check_shape(xage, "young", 0, 0, 5, 10);
  check_shape(xage, "middle-aged", 5, 10, 20, 25);
  check_shape(xage, "old", 20, 25, 35, 35);

  const auto& moisture = cat.variable(kXfmrMoisture);
  check_shape(moisture, "low", 0, 0, 20, 40);
  check_shape(moisture, "average", 20, 40, 60, 80);
  check_shape(moisture, "high", 60, 80, 100, 100);

  const auto& maint = cat.variable(kXfmrMaintenance);
  check_shape(maint, "unsuitable", 0, 0, 3, 7);
  check_shape(maint, "suitable", 3, 7, 10, 10);

  const auto& xrate = cat.variable(kXfmrFailureRate);
  check_shape(xrate, "very-low", 0.8, 0.8, 1.1, 1.2);
  check_shape(xrate, "low", 1.1, 1.2, 1.3, 1.5);
  check_shape(xrate, "average", 1.3, 1.5, 1.6, 1.7);
  check_shape(xrate, "high", 1.6, 1.7, 1.9, 2.2);
  check_shape(xrate, "very-high", 1.9, 2.2, 2.5, 2.5);

  const auto& xrepair = cat.variable(kXfmrRepairTime);
  REQUIRE(xrepair.terms().size() == 1);
  CHECK(xrepair.terms().front().shape == FuzzyTrapezoid::crisp(200.0));
  // Any input lands on the constant: the domain clamp pins it to 200 h.
  for (const double x : {-3.0, 0.0, 42.0, 200.0, 1e6}) {
    CHECK(fuzzify(xrepair, x).grade("constant") == 1.0);
  }
}

TEST_CASE("catalog construction is deterministic bit for bit") {
  const auto a = Catalog::builtin();
  const auto b = Catalog::builtin();
  REQUIRE(a.variables().size() == b.variables().size());
  for (std::size_t i = 0; i < a.variables().size(); ++i) {
    const auto& va = a.variables()[i];
    const auto& vb = b.variables()[i];
    CHECK(va.name() == vb.name());
    REQUIRE(va.terms().size() == vb.terms().size());
    for (std::size_t k = 0; k < va.terms().size(); ++k) {
      CHECK(va.terms()[k].shape == vb.terms()[k].shape);
    }
  }
}

TEST_CASE("fuzzify worked examples") {
  const auto cat = Catalog::builtin();
  const auto& age = cat.variable(kLineAge);

  const auto f6 = fuzzify(age, 6.0);
  CHECK(f6.grade("young") == 0.5);
  CHECK(f6.grade("middle-aged") == 0.5);
  CHECK(f6.grade("old") == 0.0);
  CHECK_FALSE(f6.clamped);

  const auto f22 = fuzzify(age, 22.0);
  CHECK(f22.grade("young") == 0.0);
  CHECK(f22.grade("middle-aged") == 0.0);
  CHECK(f22.grade("old") == 1.0);

  const auto calm = fuzzify(cat.variable(kWeather), 0.0);
  CHECK(calm.grade("normal") == 1.0);
  CHECK(calm.grade("adverse") == 0.0);
}

TEST_CASE("fuzzify clamps out-of-domain inputs") {
  const auto cat = Catalog::builtin();
  const auto& weather = cat.variable(kWeather);
  const auto gale = fuzzify(weather, 110.0);
  CHECK(gale.clamped);
  CHECK(gale.grade("adverse") == 1.0);
  const auto negative = fuzzify(cat.variable(kLineAge), -3.0);
  CHECK(negative.clamped);
  CHECK(negative.grade("young") == 1.0);
}

TEST_CASE("every in-domain input keeps a positive coverage floor") {
  const auto cat = Catalog::builtin();
  double floor_seen = 1.0;
  for (const auto& v : cat.variables()) {
    if (v.domain_lo() == v.domain_hi()) {
      continue;
    }
    for (int i = 0; i <= 1000; ++i) {
      const double x = v.domain_lo() +
                       (v.domain_hi() - v.domain_lo()) * (static_cast<double>(i) / 1000.0);
      double best = 0.0;
      for (const auto& t : v.terms()) {
        best = std::max(best, t.shape.membership(x));
      }
      CHECK(best > 0.0);
      floor_seen = std::min(floor_seen, best);
    }
  }
  // The breakpoint construction crosses neighbours at one half.
  CHECK(floor_seen >= 0.5 - 1e-9);
}

TEST_CASE("adjacent terms cross at one half in the overlap") {
  const auto cat = Catalog::builtin();
  for (const auto& v : cat.variables()) {
    const auto& terms = v.terms();
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      const double lo = terms[i + 1].shape.a1();
      const double hi = terms[i].shape.a4();
      REQUIRE(lo < hi);
      const double mid = 0.5 * (lo + hi);
      CHECK(terms[i].shape.membership(mid) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(terms[i + 1].shape.membership(mid) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("variable validation rejects bad term sets") {
  // Gap between supports.
  CHECK_THROWS_AS(LinguisticVariable("v", "u", 0, 10, VariableKind::input,
                                     {{"a", FuzzyTrapezoid(0, 0, 1, 2)},
                                      {"b", FuzzyTrapezoid(5, 6, 10, 10)}}),
                  Error);
  // Support outside the domain.
  CHECK_THROWS_AS(LinguisticVariable("v", "u", 0, 10, VariableKind::input,
                                     {{"a", FuzzyTrapezoid(0, 0, 11, 12)}}),
                  Error);
  // Domain not covered at the top end.
  CHECK_THROWS_AS(LinguisticVariable("v", "u", 0, 10, VariableKind::input,
                                     {{"a", FuzzyTrapezoid(0, 0, 4, 8)}}),
                  Error);
}

TEST_CASE("catalog JSON round-trip is exact") {
  const auto cat = Catalog::builtin();
  const auto j = cat.to_json();
  const auto back = Catalog::from_json(j);
  REQUIRE(back.variables().size() == cat.variables().size());
  for (std::size_t i = 0; i < cat.variables().size(); ++i) {
    const auto& va = cat.variables()[i];
    const auto& vb = back.variables()[i];
    CHECK(va.name() == vb.name());
    CHECK(va.unit() == vb.unit());
    CHECK(va.domain_lo() == vb.domain_lo());
    CHECK(va.domain_hi() == vb.domain_hi());
    CHECK((va.kind() == vb.kind()));
    REQUIRE(va.terms().size() == vb.terms().size());
    for (std::size_t k = 0; k < va.terms().size(); ++k) {
      CHECK(va.terms()[k].label == vb.terms()[k].label);
      CHECK(va.terms()[k].shape == vb.terms()[k].shape);
    }
  }
}

TEST_CASE("catalog file I/O and error paths") {
  const std::string path = "catalog_test_roundtrip.json";
  Catalog::builtin().save(path);
  const auto back = Catalog::load(path);
  CHECK(back.variables().size() == 10);
  std::remove(path.c_str());

  const std::string bad = "catalog_test_bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK_THROWS_AS(Catalog::load(bad), ParseError);
  std::remove(bad.c_str());

  // Non-monotone term shape inside an otherwise valid document.
  CHECK_THROWS_AS(
      Catalog::from_json(nlohmann::json::parse(R"({"variables":[
        {"name":"v","unit":"u","kind":"input","domain":[0,10],
         "terms":[{"label":"a","shape":[0,5,2,10]}]}]})")),
      InvalidTrapezoid);

  CHECK_THROWS_AS(Catalog::from_json(nlohmann::json::parse(R"({"x":1})")),
                  ParseError);
}

TEST_CASE("unknown lookups throw") {
  const auto cat = Catalog::builtin();
  CHECK_THROWS_AS(cat.variable("frequency"), UnknownVariable);
  CHECK_THROWS_AS(cat.variable(kLineAge).term_index("ancient"), UnknownTerm);
}
