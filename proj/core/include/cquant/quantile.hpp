#pragma once

/**
 * @file quantile.hpp
 * @brief Lower cone quantile regions, Tukey depth regions and depth.
 *
 * The lower C-quantile of X at level p is the intersection over w in C+ of
 * {z : w^T z >= q_{w^T X}(p)}. It is represented exactly by the finitely
 * many halfspaces coming from the irredundant dual solution.
 *
 * Tukey regions correspond to the trivial cone {0}, which has no interior;
 * the data are lifted to the hyperplane e^T z = 0 in R^{d+1}, solved with
 * the orthant there, and each normal w is mapped back by
 * lambda(w) = (w_1 - w_{d+1}, ..., w_d - w_{d+1}).
 */

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "cquant/core.hpp"
#include "cquant/polyhedra.hpp"
#include "cquant/vlp.hpp"

namespace cquant {

/// The trivial ordering cone {0}; its quantile regions are Tukey depth regions.
struct ZeroCone {};

using OrderingCone = std::variant<ZeroCone, Cone>;

enum class Provenance { ConeQuantile, TukeyLifted, Oracle2D };

std::string_view to_string(Provenance p);

struct QuantileRegion {
  /// Both representations; H-rep is exactly `halfspaces` (plus nothing else).
  Polyhedron region;
  /// Halfspaces of the region, canonical and sorted.
  std::vector<Halfspace> halfspaces;
  /// Dual solution entries (w, t); lifted normals for Tukey regions.
  std::vector<DualEntry> entries;
  QuantileLevel level;
  Provenance provenance;
  BensonStats stats;

  [[nodiscard]] bool contains(const Vector& z) const { return region.contains(z); }
  [[nodiscard]] bool empty() const { return region.is_empty(); }
};

struct RegionOptions {
  BensonOptions benson;
  /// Run remove_redundant on the output halfspaces (Tukey regions only).
  bool remove_redundant = false;
};

QuantileRegion quantile_region(const DataCloud& cloud, const QuantileLevel& level,
                               const Cone& cone, const std::optional<Vector>& interior = std::nullopt,
                               const RegionOptions& options = {});

/// (x, -e^T x) for every point.
DataCloud lift_dataset(const DataCloud& cloud);

/// (w_1 - w_{d+1}, ..., w_d - w_{d+1}).
Vector unlift_normal(const Vector& w);

QuantileRegion tukey_region(const DataCloud& cloud, const QuantileLevel& level,
                            const RegionOptions& options = {});

/// Dispatches on the cone: Tukey region for ZeroCone, cone quantile otherwise.
QuantileRegion region_for(const DataCloud& cloud, const QuantileLevel& level,
                          const OrderingCone& cone, const RegionOptions& options = {});

bool region_membership(const DataCloud& cloud, const QuantileLevel& level,
                       const OrderingCone& cone, const Vector& z);

/// Largest k such that z lies in the Tukey region with ceil(Np) = k; 0 when
/// z is outside the convex hull of the data.
std::size_t tukey_depth(const DataCloud& cloud, const Vector& z);

}  // namespace cquant
