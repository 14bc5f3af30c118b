#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

#include "gridfuzz/errors.hpp"
#include "gridfuzz/kernels.hpp"

namespace gridfuzz {

/// Trapezoidal fuzzy number (a1, a2, a3, a4): support [a1, a4], plateau
/// [a2, a3]. Triangular numbers are the a2 == a3 special case; crisp values
/// are fully degenerate. Construction enforces the monotone ordering.
class FuzzyTrapezoid {
 public:
  FuzzyTrapezoid(double a1, double a2, double a3, double a4);

  static FuzzyTrapezoid crisp(double value) {
    return {value, value, value, value};
  }

  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double a3() const { return a3_; }
  double a4() const { return a4_; }

  bool is_triangular() const { return a2_ == a3_; }
  bool is_crisp() const { return a1_ == a4_; }

  /// Piecewise-linear membership grade at x, in [0, 1].
  double membership(double x) const {
    return kernels::membership_point(params(), x);
  }

  /// Mean of maximum: the midpoint of the plateau.
  double mean_of_maximum() const { return 0.5 * (a2_ + a3_); }

  kernels::TrapezoidParams params() const { return {a1_, a2_, a3_, a4_}; }

 private:
  double a1_, a2_, a3_, a4_;
};

bool operator==(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b);
std::ostream& operator<<(std::ostream& os, const FuzzyTrapezoid& t);

/// Multiplication works on the candidate products of the lower pair
/// (T1 = {a1b1, a1b2, a2b1, a2b2}) and transfers the argmin/argmax positions
/// onto the upper pair (T2 = {a3b3, a3b4, a4b3, a4b4}). The trace records
/// exactly that selection. Indices are zero-based; ties pick the smallest
/// index for k and the largest for l, which keeps the endpoints equal to the
/// interval product for nonnegative operands.
struct MultiplicationTrace {
  std::array<double, 4> t1;
  std::array<double, 4> t2;
  std::size_t k = 0;
  std::size_t l = 0;
  std::array<double, 4> product;
};

enum class DivisionMode {
  /// Componentwise quotient (a1/b2, a2/b1, a3/b4, a4/b3); raises
  /// NonMonotoneResult when the quadruple comes out unordered.
  paper,
  /// Alpha-cut interval quotient (a1/b4, a2/b3, a3/b2, a4/b1); always valid
  /// for strictly positive divisors.
  interval_safe,
};

FuzzyTrapezoid add(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b);

/// Componentwise difference. Throws NonMonotoneResult when the formula
/// produces an unordered quadruple instead of silently repairing it.
FuzzyTrapezoid sub(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b);

/// Product of nonnegative trapezoids. Throws NegativeOperand otherwise.
FuzzyTrapezoid mul(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b);
FuzzyTrapezoid mul(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b,
                   MultiplicationTrace& trace);

/// Quotient of a nonnegative numerator by a strictly positive divisor.
FuzzyTrapezoid div(const FuzzyTrapezoid& a, const FuzzyTrapezoid& b,
                   DivisionMode mode = DivisionMode::paper);

}  // namespace gridfuzz
