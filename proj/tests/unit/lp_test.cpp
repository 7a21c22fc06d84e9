#include <gtest/gtest.h>

#include "cquant/lp.hpp"
#include "cquant/univariate.hpp"
#include "generators.hpp"

namespace cquant {
namespace {

TEST(Simplex, BoundedMaximum) {
  LinearProgram lp(1, ObjectiveSense::Maximize);
  lp.objective = {1};
  lp.set_bounds(0, Rational(0), Rational(1));
  const LpOutcome r = simplex_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(verify_certificate(lp, r));
}

TEST(Simplex, Unbounded) {
  LinearProgram lp(1, ObjectiveSense::Maximize);
  lp.objective = {1};
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::Unbounded);
}

TEST(Simplex, Infeasible) {
  LinearProgram lp(1);
  lp.objective = {0};
  lp.set_free(0);
  lp.add_row({1}, RowSense::GreaterEqual, 1);
  lp.add_row({1}, RowSense::LessEqual, 0);
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::Infeasible);
}

TEST(Simplex, SmallProductionProblem) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
  LinearProgram lp(2, ObjectiveSense::Maximize);
  lp.objective = {3, 5};
  lp.add_row({1, 0}, RowSense::LessEqual, 4);
  lp.add_row({0, 2}, RowSense::LessEqual, 12);
  lp.add_row({3, 2}, RowSense::LessEqual, 18);
  const LpOutcome r = simplex_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 36);
  EXPECT_EQ(r.primal, (Vector{2, 6}));
  EXPECT_TRUE(verify_certificate(lp, r));
}

TEST(QuantileLps, TwoPointExample) {
  const DataCloud x({{0}, {1}});
  const QuantileLevel level(Rational(1, 4), 2);
  const LpOutcome primal = simplex_solve(build_lp(x, level, Vector{1}));
  const LpOutcome dual = simplex_solve(build_lp_dual(x, level, Vector{1}));
  EXPECT_EQ(primal.value, Rational(1, 4));
  EXPECT_EQ(dual.value, Rational(1, 4));
  EXPECT_EQ(dual.primal[0], 0);
}

TEST(QuantileLps, CertificatesAndStrongDuality) {
  testing::InstanceRng rng(31);
  for (int i = 0; i < 150; ++i) {
    const std::size_t d = rng.index(1, 3);
    const std::size_t n = rng.index(1, 10);
    const DataCloud x = rng.cloud(n, d, 10, 2);
    const QuantileLevel level(rng.level(n), n);
    const Vector w = rng.vector(d, 3, 2);
    const LinearProgram lp = build_lp(x, level, w);
    const LinearProgram lpd = build_lp_dual(x, level, w);
    const LpOutcome a = simplex_solve(lp);
    const LpOutcome b = simplex_solve(lpd);
    ASSERT_EQ(a.status, LpStatus::Optimal);
    ASSERT_EQ(b.status, LpStatus::Optimal);
    EXPECT_TRUE(verify_certificate(lp, a));
    EXPECT_TRUE(verify_certificate(lpd, b));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(b.primal[0], quantile_direct(project_data(x, w), level));
  }
}

TEST(QuantileLps, IntegralNpOptimalSetContainsQuantile) {
  // N p = 2: phi is flat on [2, 3]; the lower quantile 2 is optimal.
  const DataCloud x({{1}, {2}, {3}, {4}});
  const QuantileLevel level(Rational(1, 2), 4);
  const Vector s{1, 2, 3, 4};
  const LpOutcome r = simplex_solve(build_lp_dual(x, level, Vector{1}));
  EXPECT_EQ(r.value, phi_eval(s, level, quantile_direct(s, level)));
}

TEST(Simplex, Deterministic) {
  testing::InstanceRng rng(37);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = rng.index(2, 10);
    const DataCloud x = rng.cloud(n, 2, 10, 1);
    const QuantileLevel level(rng.level(n), n);
    const LinearProgram lp = build_lp_dual(x, level, rng.vector(2, 3, 1));
    const LpOutcome a = simplex_solve(lp);
    const LpOutcome b = simplex_solve(lp);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.row_duals, b.row_duals);
    EXPECT_EQ(a.reduced_costs, b.reduced_costs);
  }
}

}  // namespace
}  // namespace cquant
