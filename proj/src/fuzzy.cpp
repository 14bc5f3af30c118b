#include "gridfuzz/fuzzy.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace gridfuzz {

namespace {

std::string describe(double a1, double a2, double a3, double a4) {
  std::ostringstream os;
  os << "(" << a1 << ", " << a2 << ", " << a3 << ", " << a4 << ")";
  return os.str();
}

void require_nonnegative(const FuzzyTrapezoid& t, const char* role) {
  if (t.a1() < 0.0) {
    throw NegativeOperand(std::string(role) + " has endpoints below zero: " +
                          describe(t.a1(), t.a2(), t.a3(), t.a4()));
  }
}

}  // namespace

FuzzyTrapezoid::FuzzyTrapezoid(double a1, double a2, double a3, double a4)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4) {
  if (!(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3) &&
        std::isfinite(a4))) {
    throw InvalidTrapezoid("non-finite endpoint in " + describe(a1, a2, a3, a4));
  }
  if (!(a1 <= a2 && a2 <= a3 && a3 <= a4)) {
    throw InvalidTrapezoid("endpoints not monotone in " + describe(a1, a2, a3, a4));
  }
}

bool operator==(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  return a.a1() == b.a1() && a.a2() == b.a2() && a.a3() == b.a3() &&
         a.a4() == b.a4();
}

std::ostream& operator<<(std::ostream& os, const FuzzyTrapezoid& t) {
  return os << describe(t.a1(), t.a2(), t.a3(), t.a4());
}

FuzzyTrapezoid add(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  return {a.a1() + b.a1(), a.a2() + b.a2(), a.a3() + b.a3(), a.a4() + b.a4()};
}

FuzzyTrapezoid sub(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  const double e1 = a.a1() - b.a1();
  const double e2 = a.a2() - b.a2();
  const double e3 = a.a3() - b.a3();
  const double e4 = a.a4() - b.a4();
  if (!(e1 <= e2 && e2 <= e3 && e3 <= e4)) {
    throw NonMonotoneResult("componentwise difference is unordered: " +
                            describe(e1, e2, e3, e4));
  }
  return {e1, e2, e3, e4};
}

FuzzyTrapezoid mul(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b,
                   MultiplicationTrace& trace) {
  require_nonnegative(a, "multiplicand");
  require_nonnegative(b, "multiplier");

  trace.t1 = {a.a1() * b.a1(), a.a1() * b.a2(), a.a2() * b.a1(), a.a2() * b.a2()};
  trace.t2 = {a.a3() * b.a3(), a.a3() * b.a4(), a.a4() * b.a3(), a.a4() * b.a4()};

  std::size_t k = 0;
  std::size_t l = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    if (trace.t1[i] < trace.t1[k]) {
      k = i;
    }
    if (trace.t1[i] >= trace.t1[l]) {
      l = i;
    }
  }
  trace.k = k;
  trace.l = l;
  trace.product = {trace.t1[k], trace.t1[l], trace.t2[k], trace.t2[l]};

  const auto& e = trace.product;
  if (!(e[0] <= e[1] && e[1] <= e[2] && e[2] <= e[3])) {
    throw NonMonotoneResult("index-transfer product is unordered: " +
                            describe(e[0], e[1], e[2], e[3]));
  }
  return {e[0], e[1], e[2], e[3]};
}

FuzzyTrapezoid mul(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b) {
  MultiplicationTrace trace;
  return mul(a, b, trace);
}

FuzzyTrapezoid div(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b,
                   DivisionMode mode) {
  require_nonnegative(a, "dividend");
  if (!(b.a1() > 0.0)) {
    throw DivisorNotPositive("divisor endpoints must be strictly positive: " +
                             describe(b.a1(), b.a2(), b.a3(), b.a4()));
  }
  if (mode == DivisionMode::interval_safe) {
    return {a.a1() / b.a4(), a.a2() / b.a3(), a.a3() / b.a2(), a.a4() / b.a1()};
  }
  const double e1 = a.a1() / b.a2();
  const double e2 = a.a2() / b.a1();
  const double e3 = a.a3() / b.a4();
  const double e4 = a.a4() / b.a3();
  if (!(e1 <= e2 && e2 <= e3 && e3 <= e4)) {
    throw NonMonotoneResult("componentwise quotient is unordered: " +
                            describe(e1, e2, e3, e4));
  }
  return {e1, e2, e3, e4};
}

}  // namespace gridfuzz
