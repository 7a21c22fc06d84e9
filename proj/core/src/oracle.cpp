#include "cquant/oracle.hpp"

#include <algorithm>
#include <random>

#include "cquant/univariate.hpp"

namespace cquant {

namespace {

int half_plane(const Vector& w) {
  return (w[1].sign() > 0 || (w[1].is_zero() && w[0].sign() > 0)) ? 0 : 1;
}

Rational cross(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const Vector& a, const Vector& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

// Positive rescaling with max(|w_1|, |w_2|) == 1; equal iff same direction.
Vector unit_box(const Vector& w) {
  const Rational m = std::max(w[0].abs(), w[1].abs());
  return {w[0] / m, w[1] / m};
}

bool in_dual(const Matrix& generators, const Vector& w) {
  for (const auto& g : generators) {
    if ((g[0] * w[0] + g[1] * w[1]).sign() < 0) return false;
  }
  return true;
}

}  // namespace

bool direction_admits(const DataCloud& cloud, const QuantileLevel& level, const Vector& w,
                      const Vector& z) {
  Rational wz;
  for (std::size_t j = 0; j < w.size(); ++j) wz += w[j] * z[j];
  std::size_t count = 0;
  for (const auto& x : cloud.points()) {
    Rational wx;
    for (std::size_t j = 0; j < w.size(); ++j) wx += w[j] * x[j];
    if (wx <= wz) ++count;
  }
  return count >= level.ceil_np();
}

std::vector<Vector> critical_directions_2d(const DataCloud& cloud, const OrderingCone& cone) {
  if (cloud.dim() != 2) throw Error(ErrorCode::DimensionNot2, "oracle works in the plane only");
  const Cone* c = std::get_if<Cone>(&cone);
  std::vector<Vector> dirs;
  auto offer = [&](Vector w) {
    if (w[0].is_zero() && w[1].is_zero()) return;
    if (c && !in_dual(c->generators(), w)) return;
    dirs.push_back(unit_box(w));
  };

  if (c) {
    for (const auto& g : c->generators()) {
      offer({-g[1], g[0]});
      offer({g[1], -g[0]});
    }
  } else {
    offer({Rational(1), Rational(0)});
    offer({Rational(0), Rational(1)});
    offer({Rational(-1), Rational(0)});
    offer({Rational(0), Rational(-1)});
  }
  const auto& pts = cloud.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Rational dx = pts[j][0] - pts[i][0];
      const Rational dy = pts[j][1] - pts[i][1];
      if (dx.is_zero() && dy.is_zero()) continue;
      offer({-dy, dx});
      offer({dy, -dx});
    }
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

QuantileRegion oracle_region_2d(const DataCloud& cloud, const QuantileLevel& level,
                                const OrderingCone& cone) {
  level.require_valid();
  const std::vector<Vector> critical = critical_directions_2d(cloud, cone);
  const Cone* c = std::get_if<Cone>(&cone);

  std::vector<Vector> dirs = critical;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    const Vector& a = critical[k];
    const Vector& b = critical[(k + 1) % critical.size()];
    Vector mid{a[0] + b[0], a[1] + b[1]};
    if (mid[0].is_zero() && mid[1].is_zero()) continue;
    if (c && !in_dual(c->generators(), mid)) continue;
    dirs.push_back(std::move(mid));
  }

  std::vector<Halfspace> hs;
  std::vector<DualEntry> entries;
  for (const auto& w : dirs) {
    Vector proj;
    proj.reserve(cloud.size());
    for (const auto& x : cloud.points()) proj.push_back(w[0] * x[0] + w[1] * x[1]);
    Rational t = quantile_direct(proj, level);
    entries.push_back(DualEntry{w, t, {}});
    hs.push_back(Halfspace{w, std::move(t)}.canonical());
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  Polyhedron region = intersect_halfspaces(2, hs);
  return QuantileRegion{std::move(region), std::move(hs), std::move(entries), level,
                        Provenance::Oracle2D, BensonStats{}};
}

std::vector<Vector> sample_dual_directions(const OrderingCone& cone, std::size_t dim,
                                           std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  if (const auto* c = std::get_if<Cone>(&cone)) {
    const std::vector<Vector> rays = make_dual_basis(*c).dual_rays();
    std::uniform_int_distribution<long> weight(0, 1000);
    while (out.size() < count) {
      Vector w(dim);
      bool nonzero = false;
      for (const auto& r : rays) {
        const long lambda = weight(rng);
        if (lambda == 0) continue;
        nonzero = true;
        for (std::size_t j = 0; j < dim; ++j) w[j] += Rational(lambda) * r[j];
      }
      if (nonzero) out.push_back(std::move(w));
    }
  } else {
    std::uniform_int_distribution<long> coord(-1000, 1000);
    while (out.size() < count) {
      Vector w(dim);
      bool nonzero = false;
      for (auto& x : w) {
        x = Rational(coord(rng));
        nonzero = nonzero || !x.is_zero();
      }
      if (nonzero) out.push_back(std::move(w));
    }
  }
  return out;
}

MembershipVerdict membership_sample(const DataCloud& cloud, const QuantileLevel& level,
                                    const OrderingCone& cone, const Vector& z,
                                    std::size_t trials, std::uint64_t seed) {
  if (z.size() != cloud.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  for (auto& w : sample_dual_directions(cone, cloud.dim(), trials, seed)) {
    if (!direction_admits(cloud, level, w, z)) return {false, std::move(w)};
  }
  return {};
}

}  // namespace cquant
