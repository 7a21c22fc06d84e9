#pragma once

/**
 * @file lp.hpp
 * @brief Exact rational bounded-variable simplex.
 *
 * Dense tableau, two phases, Bland's rule throughout. The solver is the
 * reference oracle for the scalarized quantile programs and the workhorse of
 * the feasibility and redundancy checks in the polyhedral code.
 *
 * Dual convention: at an optimum, objective = A^T y + d where y are the row
 * multipliers and d the structural reduced costs, in the sense of the
 * program as stated (so for a maximization the signs are mirrored).
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cquant/core.hpp"
#include "cquant/rational.hpp"

namespace cquant {

enum class ObjectiveSense { Minimize, Maximize };
enum class RowSense { LessEqual, Equal, GreaterEqual };

struct LinearProgram {
  ObjectiveSense sense = ObjectiveSense::Minimize;
  Vector objective;
  Matrix rows;
  std::vector<RowSense> row_senses;
  Vector rhs;
  /// Per-variable bounds; nullopt means infinite.
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;

  LinearProgram() = default;
  /// n variables with bounds [0, +inf) and zero objective.
  explicit LinearProgram(std::size_t n, ObjectiveSense s = ObjectiveSense::Minimize);

  [[nodiscard]] std::size_t num_vars() const { return objective.size(); }
  [[nodiscard]] std::size_t num_rows() const { return rows.size(); }

  void add_row(Vector coeffs, RowSense s, Rational rhs_value);
  void set_bounds(std::size_t j, std::optional<Rational> lo, std::optional<Rational> hi);
  void set_free(std::size_t j) { set_bounds(j, std::nullopt, std::nullopt); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vector primal;
  Vector row_duals;
  Vector reduced_costs;
  std::size_t pivots = 0;
};

/// Throws MalformedProgram on inconsistent dimensions or crossed bounds.
LpOutcome simplex_solve(const LinearProgram& lp);

/// Checks an Optimal outcome exactly: primal feasibility, sign-correct
/// multipliers, complementary slackness and equal primal/dual values.
bool verify_certificate(const LinearProgram& lp, const LpOutcome& outcome);

/// max sum_i (w^T x^i)(u_i - v_i) s.t. 0 <= u <= p, 0 <= v <= 1-p, e^T u = e^T v.
/// Variables are ordered (u_1..u_N, v_1..v_N).
LinearProgram build_lp(const DataCloud& cloud, const QuantileLevel& level, const Vector& w);

/// min sum_i p r+_i + (1-p) r-_i s.t. t + r+_i - r-_i = w^T x^i, r+, r- >= 0, t free.
/// Variables are ordered (t, r+_1..r+_N, r-_1..r-_N).
LinearProgram build_lp_dual(const DataCloud& cloud, const QuantileLevel& level, const Vector& w);

}  // namespace cquant
