#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpbl/rational.hpp"

namespace qpbl {

/// Declared analytic properties of a comparison function on [0, inf).
struct ScalarProperties {
  bool continuous = false;
  bool monotone_nondecreasing = false;
  bool linear = false;
  bool zero_iff_zero = false;
  bool subadditive = false;
};

/// Nonnegative comparison function on [0, inf) with declared properties.
/// Declared properties are spot-verified on a 1000-point grid at
/// construction (monotonicity, linearity via phi(a t) = a phi(t),
/// phi(0) = 0 for zero-iff-zero); a declaration the grid refutes raises
/// BadParams. Grid verification is evidence, not proof; solvers record it
/// as such in their hypothesis reports.
struct ScalarFunction {
  std::string name;
  std::function<double(double)> fn;
  /// Exact evaluator on rationals, when the closed form permits one;
  /// lets finite-table hypothesis checks run in exact arithmetic.
  std::function<Rational(const Rational&)> exact;
  ScalarProperties declared;

  double operator()(double t) const { return fn(t); }
  bool has_exact() const { return static_cast<bool>(exact); }
};

/// Builds a ScalarFunction and runs the construction-time spot checks
/// over [0, grid_max].
ScalarFunction make_scalar_function(std::string name, std::function<double(double)> fn,
                                    ScalarProperties declared,
                                    std::function<Rational(const Rational&)> exact = {},
                                    double grid_max = 10.0);

/// t -> c t with c >= 0; carries an exact evaluator when c is exactly
/// representable.
ScalarFunction linear_scalar(double c);
ScalarFunction linear_scalar(const Rational& c);

/// t -> t^2/4 for t <= 1, 1/4 beyond: continuous, monotone nondecreasing,
/// zero exactly at zero.
ScalarFunction quadratic_capped_scalar();

/// Parses a CLI spec: "linear:<c>" or "quad-capped".
ScalarFunction parse_scalar(const std::string& text);

}  // namespace qpbl
