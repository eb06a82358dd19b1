#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotod/integer_matrix.hpp"

namespace rotod {

/// Integer polynomial, leading coefficient first.
using IntPoly = std::vector<BigInt>;

/// det(xI - M) by Faddeev-LeVerrier; every division is exact.
IntPoly characteristic_polynomial(const IntegerMatrix& m);

std::string poly_to_string(const IntPoly& p);
BigRational evaluate(const IntPoly& p, const BigRational& x);
long double evaluate(const IntPoly& p, long double x);

/// p / gcd(p, p') with integer coefficients and positive leading term.
IntPoly square_free_part(const IntPoly& p);

/// Rational bracket [lo, hi] of width <= `width` around the largest real
/// root of p, found by bisection on the square-free part. Empty if p has no
/// real root.
struct RootBracket {
  BigRational lo;
  BigRational hi;
};
std::optional<RootBracket> largest_real_root(const IntPoly& p, const BigRational& width);

struct PerronData {
  IntPoly char_poly;
  long double radius = 0;
  /// Half-width of the exact rational bracket around the radius.
  long double error_bound = 0;
  RootBracket bracket;
  /// Set when the radius is an integer root of the characteristic polynomial.
  std::optional<BigInt> exact_integer;

  /// Estimate from power iteration on M + I.
  long double power_estimate = 0;
  /// Relative change of the power iterate at the last step.
  long double power_residual = 0;
  bool power_converged = false;

  /// Radius to 12 decimals.
  std::string decimal() const;
};

/// Characteristic polynomial, spectral radius (the largest real root of
/// the characteristic polynomial for a nonnegative matrix) and a power
/// iteration cross-check to relative tolerance 1e-10.
PerronData perron_data(const IntegerMatrix& m);

}  // namespace rotod
