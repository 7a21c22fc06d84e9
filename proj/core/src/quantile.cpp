#include "cquant/quantile.hpp"

#include <algorithm>
#include <string>

#include "cquant/linalg.hpp"

namespace cquant {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::ConeQuantile: return "cone-quantile";
    case Provenance::TukeyLifted: return "tukey-lifted";
    case Provenance::Oracle2D: return "oracle-2d";
  }
  return "unknown";
}

namespace {

void sort_unique(std::vector<Halfspace>& hs) {
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

Polyhedron empty_region(std::size_t d, std::vector<Halfspace> hs) {
  Vector e(d);
  e[0] = Rational(1);
  hs.push_back(Halfspace{e, Rational(1)});
  e[0] = Rational(-1);
  hs.push_back(Halfspace{e, Rational(0)});
  return Polyhedron::from_both(d, HRep{std::move(hs), {}}, VRep{});
}

}  // namespace

QuantileRegion quantile_region(const DataCloud& cloud, const QuantileLevel& level,
                               const Cone& cone, const std::optional<Vector>& interior,
                               const RegionOptions& options) {
  level.require_valid();
  if (cloud.dim() != cone.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "data dimension " + std::to_string(cloud.dim()) +
                                                  " does not match cone dimension " +
                                                  std::to_string(cone.dim()));
  }
  const DualConeBasis basis = make_dual_basis(cone, interior);
  DualSolution sol = benson_dual_solve(cloud, level, basis, options.benson);
  std::vector<Halfspace> hs = halfspaces_of(sol);
  Polyhedron region = intersect_halfspaces(cloud.dim(), hs);
  return QuantileRegion{std::move(region), std::move(hs), std::move(sol.entries), level,
                        Provenance::ConeQuantile, sol.stats};
}

DataCloud lift_dataset(const DataCloud& cloud) {
  std::vector<Vector> lifted;
  lifted.reserve(cloud.size());
  for (const auto& x : cloud.points()) {
    Vector y = x;
    Rational s;
    for (const auto& v : x) s -= v;
    y.push_back(std::move(s));
    lifted.push_back(std::move(y));
  }
  return DataCloud(std::move(lifted));
}

Vector unlift_normal(const Vector& w) {
  if (w.empty()) throw Error(ErrorCode::DimensionMismatch, "cannot unlift an empty normal");
  Vector out;
  out.reserve(w.size() - 1);
  for (std::size_t j = 0; j + 1 < w.size(); ++j) out.push_back(w[j] - w.back());
  return out;
}

QuantileRegion tukey_region(const DataCloud& cloud, const QuantileLevel& level,
                            const RegionOptions& options) {
  level.require_valid();
  const std::size_t d = cloud.dim();
  const DataCloud lifted = lift_dataset(cloud);
  const DualConeBasis basis = make_dual_basis(Cone::orthant(d + 1), Vector(d + 1, Rational(1)));
  DualSolution sol = benson_dual_solve(lifted, level, basis, options.benson);

  std::vector<Halfspace> hs;
  bool infeasible = false;
  for (const auto& e : sol.entries) {
    Vector normal = unlift_normal(e.w);
    if (linalg::is_zero(normal)) {
      // 0^T z >= t: vacuous for t <= 0, infeasible otherwise.
      if (e.t.sign() > 0) infeasible = true;
      continue;
    }
    hs.push_back(Halfspace{std::move(normal), e.t}.canonical());
  }
  sort_unique(hs);

  Polyhedron region = infeasible ? empty_region(d, hs) : intersect_halfspaces(d, hs);
  if (options.remove_redundant && !infeasible && !region.is_empty()) {
    const Polyhedron reduced = remove_redundant(region);
    std::vector<Halfspace> kept = reduced.hrep().inequalities;
    for (const auto& eq : reduced.hrep().equations) {
      kept.push_back(Halfspace{eq.normal, eq.offset}.canonical());
      Vector neg = eq.normal;
      for (auto& x : neg) x = -x;
      kept.push_back(Halfspace{std::move(neg), -eq.offset}.canonical());
    }
    sort_unique(kept);
    hs = std::move(kept);
    region = intersect_halfspaces(d, hs);
  }
  return QuantileRegion{std::move(region), std::move(hs), std::move(sol.entries), level,
                        Provenance::TukeyLifted, sol.stats};
}

QuantileRegion region_for(const DataCloud& cloud, const QuantileLevel& level,
                          const OrderingCone& cone, const RegionOptions& options) {
  if (const auto* c = std::get_if<Cone>(&cone)) {
    return quantile_region(cloud, level, *c, std::nullopt, options);
  }
  return tukey_region(cloud, level, options);
}

bool region_membership(const DataCloud& cloud, const QuantileLevel& level,
                       const OrderingCone& cone, const Vector& z) {
  if (z.size() != cloud.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  return region_for(cloud, level, cone).contains(z);
}

std::size_t tukey_depth(const DataCloud& cloud, const Vector& z) {
  if (z.size() != cloud.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  const std::size_t n = cloud.size();
  auto member_at = [&](std::size_t k) {
    // p = (2k - 1) / (2N): Np = k - 1/2, so ceil(Np) = k and Np is not an integer.
    const QuantileLevel level(Rational(mpz_class(2 * k - 1), mpz_class(2 * n)), n);
    return tukey_region(cloud, level).contains(z);
  };
  // Regions shrink as k grows, so membership is monotone in k.
  std::size_t lo = 0;
  std::size_t hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (member_at(mid)) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

}  // namespace cquant
