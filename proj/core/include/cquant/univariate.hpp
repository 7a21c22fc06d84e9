#pragma once

/**
 * @file univariate.hpp
 * @brief Scalar quantiles, the check objective and the scalarization oracle.
 *
 * For a sample a_1..a_N and level p the check objective is
 *
 *   phi(t) = sum_i p (a_i - t)^+ + (1 - p) (a_i - t)^-,
 *
 * a convex piecewise-linear function whose right derivative is
 * #{a_i <= t} - pN. When pN is not an integer its unique minimizer is the
 * lower empirical quantile q(p) = the ceil(Np)-th smallest sample value.
 */

#include <cstddef>
#include <utility>

#include "cquant/core.hpp"
#include "cquant/rational.hpp"

namespace cquant {

using ScalarSample = Vector;

/// min{x in S : #{y in S : y <= x} >= ceil(Np)}; multiset counting.
Rational quantile_direct(const ScalarSample& sample, const QuantileLevel& level);

Rational phi_eval(const ScalarSample& sample, const QuantileLevel& level, const Rational& t);

/// Right derivative #{x <= t} - pN.
Rational phi_directional_derivative(const ScalarSample& sample, const QuantileLevel& level,
                                    const Rational& t);

struct PhiMinimum {
  Rational argmin;
  Rational value;
};

/// Sorting-based minimizer; throws IntegralNp when pN is an integer.
PhiMinimum minimize_phi(const ScalarSample& sample, const QuantileLevel& level);

struct ScalarizedSolution {
  Vector u;
  Vector v;
  Rational value;
  /// sum_i x^i (u_i - v_i) in data space.
  Vector support_point;
};

/// Greedy optimal solution of the w-weighted scalarized program. u-mass goes
/// to the largest projections, v-mass to the smallest, while the marginal
/// gain stays positive. Ties in projected value are broken by lower index.
ScalarizedSolution solve_scalarized_lp(const DataCloud& cloud, const QuantileLevel& level,
                                       const Vector& w);

}  // namespace cquant
