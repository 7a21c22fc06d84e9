#include "cquant/univariate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace cquant {

namespace {

void check_size(const ScalarSample& sample, const QuantileLevel& level) {
  if (sample.empty()) throw Error(ErrorCode::DimensionMismatch, "empty sample");
  if (sample.size() != level.n()) {
    throw Error(ErrorCode::DimensionMismatch, "sample has " + std::to_string(sample.size()) +
                                                  " values, level was built for N=" +
                                                  std::to_string(level.n()));
  }
}

}  // namespace

Rational quantile_direct(const ScalarSample& sample, const QuantileLevel& level) {
  check_size(sample, level);
  ScalarSample sorted = sample;
  const auto k = static_cast<std::ptrdiff_t>(level.ceil_np()) - 1;
  std::nth_element(sorted.begin(), sorted.begin() + k, sorted.end());
  return sorted[static_cast<std::size_t>(k)];
}

Rational phi_eval(const ScalarSample& sample, const QuantileLevel& level, const Rational& t) {
  check_size(sample, level);
  Rational above;
  Rational below;
  for (const auto& x : sample) {
    const Rational r = x - t;
    if (r.sign() > 0) above += r;
    else below -= r;
  }
  return level.p() * above + (Rational(1) - level.p()) * below;
}

Rational phi_directional_derivative(const ScalarSample& sample, const QuantileLevel& level,
                                    const Rational& t) {
  check_size(sample, level);
  const auto count = static_cast<unsigned long>(
      std::count_if(sample.begin(), sample.end(), [&](const Rational& x) { return x <= t; }));
  return Rational(count) - level.p() * Rational(static_cast<unsigned long>(level.n()));
}

PhiMinimum minimize_phi(const ScalarSample& sample, const QuantileLevel& level) {
  level.require_valid();
  Rational t = quantile_direct(sample, level);
  Rational g = phi_eval(sample, level, t);
  return {std::move(t), std::move(g)};
}

ScalarizedSolution solve_scalarized_lp(const DataCloud& cloud, const QuantileLevel& level,
                                       const Vector& w) {
  const Vector a = project_data(cloud, w);
  const std::size_t n = a.size();
  if (n != level.n()) {
    throw Error(ErrorCode::DimensionMismatch, "level was built for a different N");
  }
  std::vector<std::size_t> desc(n);
  std::iota(desc.begin(), desc.end(), 0);
  std::vector<std::size_t> asc = desc;
  std::stable_sort(desc.begin(), desc.end(), [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
  std::stable_sort(asc.begin(), asc.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });

  ScalarizedSolution sol{Vector(n), Vector(n), Rational(0), Vector(cloud.dim())};
  const Rational q = Rational(1) - level.p();
  std::size_t ui = 0;
  std::size_t vi = 0;
  Rational u_room = level.p();
  Rational v_room = q;
  while (ui < n && vi < n) {
    const std::size_t top = desc[ui];
    const std::size_t bottom = asc[vi];
    const Rational gain = a[top] - a[bottom];
    if (gain.sign() <= 0) break;
    const Rational step = std::min(u_room, v_room);
    sol.u[top] += step;
    sol.v[bottom] += step;
    sol.value += step * gain;
    u_room -= step;
    v_room -= step;
    if (u_room.is_zero()) {
      ++ui;
      u_room = level.p();
    }
    if (v_room.is_zero()) {
      ++vi;
      v_room = q;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational m = sol.u[i] - sol.v[i];
    if (m.is_zero()) continue;
    for (std::size_t j = 0; j < cloud.dim(); ++j) sol.support_point[j] += m * cloud[i][j];
  }
  return sol;
}

}  // namespace cquant
