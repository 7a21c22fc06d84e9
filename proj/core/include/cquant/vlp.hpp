#pragma once

/**
 * @file vlp.hpp
 * @brief Geometric dual of the quantile vector program and its dual Benson solver.
 *
 * The dual objective maps (w, t) with w in B+ to
 *
 *   D(w, t) = (s w_1, ..., s w_{d-1}, phi_{w^T X}(t)),   s = sign(c_d),
 *
 * and the extended image is D[B+ x R] + K with K = {0}^{d-1} x R_+. Writing
 * eta for the first d-1 coordinates, the image is the epigraph over the
 * eta-image of B+ of g(w(eta)) = min_t phi_{w^T X}(t), a convex
 * piecewise-linear function. The solver refines an outer approximation of
 * that epigraph with supporting cuts mu >= w(eta)^T y, where y is the support
 * point of an optimal scalarized solution, until every vertex lies on the
 * graph of g. The vertices of the final polyhedron, paired with the unique
 * phi-minimizers, form the irredundant dual solution.
 */

#include <cstddef>
#include <vector>

#include "cquant/core.hpp"
#include "cquant/polyhedra.hpp"
#include "cquant/rational.hpp"

namespace cquant {

struct DualImagePoint {
  Vector eta;
  Rational mu;

  friend bool operator==(const DualImagePoint&, const DualImagePoint&) = default;
  friend auto operator<=>(const DualImagePoint&, const DualImagePoint&) = default;
};

/// One element (w, t) of the dual solution with its image point D(w, t).
struct DualEntry {
  Vector w;  // external coordinates, c^T w = 1
  Rational t;
  DualImagePoint image;

  friend bool operator==(const DualEntry&, const DualEntry&) = default;
};

struct BensonStats {
  std::size_t rounds = 0;
  std::size_t cuts = 0;
  std::size_t scalarizations = 0;

  friend bool operator==(const BensonStats&, const BensonStats&) = default;
};

struct BensonOptions {
  /// Re-checks the termination and cut-validity invariants and throws
  /// std::logic_error on any violation.
  bool audit = false;
  /// Keep the outer approximation of every round.
  bool record_history = false;
};

/// A cut mu >= w(eta)^T y in (eta, mu) coordinates, with the round it was added.
struct BensonCut {
  Halfspace halfspace;
  std::size_t round;
};

struct DualSolution {
  /// Sorted by w.
  std::vector<DualEntry> entries;
  /// Final outer approximation (equal to the extended image), both representations.
  Polyhedron image;
  BensonStats stats;
  std::vector<BensonCut> cuts;
  std::vector<Polyhedron> history;
};

/// (s w_1, ..., s w_{d-1}) for w in external coordinates.
Vector eta_of(const Vector& w, const DualConeBasis& basis);
/// Inverse of eta_of on the hyperplane c^T w = 1; external coordinates.
Vector w_of(const Vector& eta, const DualConeBasis& basis);

/// eta-image of B+ times {mu >= 0}, as an H-representation in R^d.
Polyhedron initial_outer(const DualConeBasis& basis);

/// Throws IntegralNp when Np is an integer and DimensionMismatch when the
/// data and cone dimensions differ.
DualSolution benson_dual_solve(const DataCloud& cloud, const QuantileLevel& level,
                               const DualConeBasis& basis, const BensonOptions& options = {});

/// One canonical halfspace {z : w^T z >= t} per entry, sorted by normal.
std::vector<Halfspace> halfspaces_of(const DualSolution& sol);

}  // namespace cquant
