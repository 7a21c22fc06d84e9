#pragma once

/**
 * @file core.hpp
 * @brief Domain types for point clouds, quantile levels and ordering cones.
 *
 * A cone is always given in generator form C = {Y^T y : y >= 0}; its dual is
 * C+ = {w : Y w >= 0}. Fixing an interior point c of C slices C+ into the
 * bounded base B+ = {w in C+ : c^T w = 1}, which parameterizes every
 * scalarization the solver evaluates.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cquant/error.hpp"
#include "cquant/rational.hpp"

namespace cquant {

/// Finite collection of N points in R^d. Duplicates are kept; counts are
/// multiset counts.
class DataCloud {
 public:
  explicit DataCloud(std::vector<Vector> points);

  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vector>& points() const { return points_; }
  [[nodiscard]] const Vector& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Vector> points_;
  std::size_t dim_ = 0;
};

/// A level p in (0,1) bound to a sample size N.
class QuantileLevel {
 public:
  QuantileLevel(Rational p, std::size_t n);

  [[nodiscard]] const Rational& p() const { return p_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  /// ceil(N p); lies in [1, N].
  [[nodiscard]] std::size_t ceil_np() const { return ceil_np_; }
  /// True iff N p is not an integer, the hypothesis under which the
  /// minimizer of the check objective is unique.
  [[nodiscard]] bool valid() const { return valid_; }

  /// Throws IntegralNp unless valid().
  void require_valid() const;

 private:
  Rational p_;
  std::size_t n_;
  std::size_t ceil_np_;
  bool valid_;
};

/// Validated polyhedral cone in generator form: full-dimensional and line-free.
class Cone {
 public:
  [[nodiscard]] const Matrix& generators() const { return generators_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }

  /// Nonnegative orthant R^d_+ with Y = I.
  static Cone orthant(std::size_t d);

 private:
  friend Cone validate_cone(const Matrix& generators);
  Cone(Matrix generators, std::size_t dim) : generators_(std::move(generators)), dim_(dim) {}

  Matrix generators_;
  std::size_t dim_;
};

/// Base B+ = {w : Y w >= 0, c^T w = 1} of the dual cone, stored in internal
/// coordinates in which c_d != 0.
///
/// If the supplied (or default) interior point has c_d == 0, two coordinates
/// are swapped so that the last one is nonzero; the permutation is applied
/// to Y, c and data internally and undone on every value handed back.
class DualConeBasis {
 public:
  [[nodiscard]] const Cone& cone() const { return cone_; }
  [[nodiscard]] std::size_t dim() const { return cone_.dim(); }
  /// Generators with columns in internal order.
  [[nodiscard]] const Matrix& generators() const { return generators_; }
  /// Interior point in internal order; back() != 0.
  [[nodiscard]] const Vector& interior() const { return interior_; }
  /// Interior point as supplied (external order).
  [[nodiscard]] Vector interior_external() const { return to_external(interior_); }
  /// Extreme directions of C+ (external order), one per ray, primitive integer scaled.
  [[nodiscard]] const std::vector<Vector>& dual_rays() const { return dual_rays_; }
  /// internal[k] = external[permutation()[k]].
  [[nodiscard]] const std::vector<std::size_t>& permutation() const { return perm_; }
  [[nodiscard]] bool permuted() const;

  [[nodiscard]] Vector to_internal(const Vector& external) const;
  [[nodiscard]] Vector to_external(const Vector& internal) const;

 private:
  friend DualConeBasis make_dual_basis(const Cone& cone, const std::optional<Vector>& c);
  DualConeBasis(Cone cone, Matrix generators, Vector interior, std::vector<Vector> dual_rays,
                std::vector<std::size_t> perm)
      : cone_(std::move(cone)),
        generators_(std::move(generators)),
        interior_(std::move(interior)),
        dual_rays_(std::move(dual_rays)),
        perm_(std::move(perm)) {}

  Cone cone_;
  Matrix generators_;
  Vector interior_;
  std::vector<Vector> dual_rays_;
  std::vector<std::size_t> perm_;
};

/// Checks rank(Y) == d (NotFullDimensional) and that no nonzero nonnegative
/// combination of the generators vanishes (ContainsLine). Zero rows are dropped.
Cone validate_cone(const Matrix& generators);

/// Default c is Y^T e. Throws NotInterior if c^T w <= 0 for some extreme
/// direction w of C+.
DualConeBasis make_dual_basis(const Cone& cone, const std::optional<Vector>& c = std::nullopt);

/// Inner products (w^T x^1, ..., w^T x^N), aligned with the cloud's order.
Vector project_data(const DataCloud& cloud, const Vector& w);

}  // namespace cquant
