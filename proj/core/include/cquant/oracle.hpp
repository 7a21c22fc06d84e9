#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force verifiers that share no code with the Benson path.
 *
 * In the plane the ordering of the projections w^T x^i only changes when w
 * crosses a direction orthogonal to some difference x^i - x^j. Between two
 * such critical directions the k-th order statistic is attained by one fixed
 * data point, so the quantile halfspaces of the arc are conic combinations
 * of the halfspaces at its endpoints. Intersecting over all critical
 * directions therefore gives the region exactly.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cquant/core.hpp"
#include "cquant/quantile.hpp"

namespace cquant {

/// Critical directions in angular order: pair normals and cone extremes
/// (axis directions for the trivial cone), restricted to C+.
std::vector<Vector> critical_directions_2d(const DataCloud& cloud, const OrderingCone& cone);

/// Exact planar region: intersection of {z : w^T z >= q_{w^T X}(p)} over all
/// critical directions and one interior direction per arc. Throws
/// DimensionNot2 unless d == 2.
QuantileRegion oracle_region_2d(const DataCloud& cloud, const QuantileLevel& level,
                                const OrderingCone& cone);

struct MembershipVerdict {
  bool not_refuted = true;
  /// First sampled direction w with w^T z < q_{w^T X}(p).
  std::optional<Vector> counterexample;
};

/// One-sided test of z against random directions of C+ (random nonnegative
/// combinations of its extreme rays; uniform integer directions for the
/// trivial cone). Deterministic given the seed.
MembershipVerdict membership_sample(const DataCloud& cloud, const QuantileLevel& level,
                                    const OrderingCone& cone, const Vector& z,
                                    std::size_t trials, std::uint64_t seed);

/// #{i : w^T x^i <= w^T z} >= ceil(Np), i.e. w^T z >= q_{w^T X}(p).
bool direction_admits(const DataCloud& cloud, const QuantileLevel& level, const Vector& w,
                      const Vector& z);

/// Random directions in C+ as used by membership_sample.
std::vector<Vector> sample_dual_directions(const OrderingCone& cone, std::size_t dim,
                                           std::size_t count, std::uint64_t seed);

}  // namespace cquant
