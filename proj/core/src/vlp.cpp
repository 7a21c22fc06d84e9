#include "cquant/vlp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cquant/linalg.hpp"
#include "cquant/univariate.hpp"

namespace cquant {

namespace {

// w(eta) = base + sum_j eta_j cols[j] in internal coordinates.
struct AffineLift {
  Vector base;
  Matrix cols;
  Rational sign;

  explicit AffineLift(const DualConeBasis& basis) {
    const Vector& c = basis.interior();
    const std::size_t d = c.size();
    const Rational& last = c.back();
    sign = last.sign() > 0 ? Rational(1) : Rational(-1);
    base.assign(d, Rational(0));
    base[d - 1] = Rational(1) / last;
    for (std::size_t j = 0; j + 1 < d; ++j) {
      Vector col(d);
      col[j] = sign;
      col[d - 1] = -(c[j] * sign) / last;
      cols.push_back(std::move(col));
    }
  }

  [[nodiscard]] Vector operator()(const Vector& eta) const {
    Vector w = base;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (eta[j].is_zero()) continue;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (!cols[j][k].is_zero()) w[k] += eta[j] * cols[j][k];
      }
    }
    return w;
  }

  // {(eta, mu) : mu >= w(eta)^T y}.
  [[nodiscard]] Halfspace cut(const Vector& y) const {
    Halfspace h;
    for (const auto& col : cols) h.normal.push_back(-dot(col, y));
    h.normal.emplace_back(1);
    h.offset = dot(base, y);
    return h;
  }
};

std::vector<Halfspace> initial_constraints(const DualConeBasis& basis, const AffineLift& lift) {
  const std::size_t d = basis.dim();
  std::vector<Halfspace> out;
  for (const auto& g : basis.generators()) {
    Halfspace h;
    for (const auto& col : lift.cols) h.normal.push_back(dot(g, col));
    h.normal.emplace_back(0);
    h.offset = -dot(g, lift.base);
    if (linalg::is_zero(h.normal)) {
      if (h.offset.sign() > 0) throw Error(ErrorCode::EmptyBasis, "dual cone basis is empty");
      continue;
    }
    out.push_back(h.canonical());
  }
  Vector floor(d);
  floor[d - 1] = Rational(1);
  out.push_back(Halfspace{std::move(floor), Rational(0)});
  return out;
}

struct Evaluation {
  Rational argmin;
  Rational value;
};

}  // namespace

Vector eta_of(const Vector& w, const DualConeBasis& basis) {
  if (w.size() != basis.dim()) throw Error(ErrorCode::DimensionMismatch, "eta_of: dimension");
  const Vector wi = basis.to_internal(w);
  const Rational s = basis.interior().back().sign() > 0 ? Rational(1) : Rational(-1);
  Vector eta;
  for (std::size_t j = 0; j + 1 < wi.size(); ++j) eta.push_back(s * wi[j]);
  return eta;
}

Vector w_of(const Vector& eta, const DualConeBasis& basis) {
  if (eta.size() + 1 != basis.dim()) throw Error(ErrorCode::DimensionMismatch, "w_of: dimension");
  return basis.to_external(AffineLift(basis)(eta));
}

Polyhedron initial_outer(const DualConeBasis& basis) {
  const AffineLift lift(basis);
  return Polyhedron::from_hrep(basis.dim(), HRep{initial_constraints(basis, lift), {}});
}

DualSolution benson_dual_solve(const DataCloud& cloud, const QuantileLevel& level,
                               const DualConeBasis& basis, const BensonOptions& options) {
  level.require_valid();
  const std::size_t d = basis.dim();
  if (cloud.dim() != d) {
    throw Error(ErrorCode::DimensionMismatch, "data dimension " + std::to_string(cloud.dim()) +
                                                  " does not match cone dimension " +
                                                  std::to_string(d));
  }
  if (cloud.size() != level.n()) {
    throw Error(ErrorCode::DimensionMismatch, "level was built for a different N");
  }
  std::vector<Vector> permuted;
  permuted.reserve(cloud.size());
  for (const auto& x : cloud.points()) permuted.push_back(basis.to_internal(x));
  const DataCloud data(std::move(permuted));

  const AffineLift lift(basis);
  std::vector<Halfspace> constraints = initial_constraints(basis, lift);
  DoubleDescription dd(d);
  for (const auto& h : constraints) dd.add_inequality(h);

  DualSolution sol{{}, Polyhedron::from_hrep(d, {}), {}, {}, {}};
  std::map<Vector, Evaluation> cache;
  std::vector<DualImagePoint> confirmed;

  auto evaluate = [&](const Vector& eta) -> const Evaluation& {
    auto it = cache.find(eta);
    if (it != cache.end()) return it->second;
    ++sol.stats.scalarizations;
    PhiMinimum m = minimize_phi(project_data(data, lift(eta)), level);
    return cache.emplace(eta, Evaluation{std::move(m.argmin), std::move(m.value)}).first->second;
  };

  VRep vrep;
  while (true) {
    ++sol.stats.rounds;
    vrep = dd.vrep();
    if (vrep.vertices.empty() || !vrep.lines.empty()) {
      throw std::logic_error("outer approximation lost its vertices");
    }
    if (options.record_history) {
      Polyhedron p = Polyhedron::from_vrep(d, vrep);
      sol.history.push_back(p);
    }

    std::vector<Halfspace> round_cuts;
    for (const auto& v : vrep.vertices) {
      Vector eta(v.begin(), v.end() - 1);
      const Rational& mu = v.back();
      const Evaluation& ev = evaluate(eta);
      if (mu == ev.value) {
        confirmed.push_back(DualImagePoint{std::move(eta), mu});
        continue;
      }
      if (mu > ev.value) throw std::logic_error("outer vertex lies above the dual image");
      const Vector w = lift(eta);
      ScalarizedSolution s = solve_scalarized_lp(data, level, w);
      if (options.audit && s.value != ev.value) {
        throw std::logic_error("scalarization value differs from the phi minimum at w=" +
                               to_string(w));
      }
      Halfspace cut = lift.cut(s.support_point).canonical();
      if (cut.contains(v)) throw std::logic_error("cut does not separate its vertex");
      round_cuts.push_back(std::move(cut));
    }
    if (round_cuts.empty()) break;

    std::sort(round_cuts.begin(), round_cuts.end());
    round_cuts.erase(std::unique(round_cuts.begin(), round_cuts.end()), round_cuts.end());
    for (auto& cut : round_cuts) {
      dd.add_inequality(cut);
      constraints.push_back(cut);
      sol.cuts.push_back(BensonCut{std::move(cut), sol.stats.rounds});
      ++sol.stats.cuts;
    }
  }

  if (options.audit) {
    for (const auto& cut : sol.cuts) {
      for (const auto& pt : confirmed) {
        Vector y = pt.eta;
        y.push_back(pt.mu);
        if (!cut.halfspace.contains(y)) {
          throw std::logic_error("cut from round " + std::to_string(cut.round) +
                                 " is violated by confirmed vertex " + to_string(y));
        }
      }
    }
    for (std::size_t k = 1; k < sol.history.size(); ++k) {
      if (!poly_contains(sol.history[k - 1], sol.history[k])) {
        throw std::logic_error("outer approximations are not nested at round " +
                               std::to_string(k + 1));
      }
    }
  }

  for (const auto& v : vrep.vertices) {
    Vector eta(v.begin(), v.end() - 1);
    const Evaluation& ev = evaluate(eta);
    if (options.audit && v.back() != ev.value) {
      throw std::logic_error("final vertex not on the dual image");
    }
    DualEntry e{basis.to_external(lift(eta)), ev.argmin, DualImagePoint{eta, v.back()}};
    sol.entries.push_back(std::move(e));
  }
  std::sort(sol.entries.begin(), sol.entries.end(),
            [](const DualEntry& a, const DualEntry& b) { return a.w < b.w; });

  sol.image = Polyhedron::from_both(d, HRep{std::move(constraints), {}}, std::move(vrep));
  return sol;
}

std::vector<Halfspace> halfspaces_of(const DualSolution& sol) {
  if (sol.entries.empty()) throw Error(ErrorCode::EmptySolution, "dual solution has no entries");
  std::vector<Halfspace> out;
  out.reserve(sol.entries.size());
  for (const auto& e : sol.entries) out.push_back(Halfspace{e.w, e.t}.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cquant
