#pragma once

/**
 * @file polyhedra.hpp
 * @brief Exact polyhedral calculus: double description, H/V conversion,
 * redundancy removal and set equality.
 *
 * Inequalities are stored as {z : normal^T z >= offset}. Canonical scaling
 * divides a halfspace by the absolute value of the first nonzero normal
 * entry, so equal halfspaces compare equal bit-for-bit.
 *
 * The double description core works on homogeneous cones with integer
 * generators; adjacency of two extreme rays is decided by the rank of the
 * constraints active at both, after a cheap combinatorial prefilter.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cquant/rational.hpp"

namespace cquant {

struct Halfspace {
  Vector normal;
  Rational offset;

  [[nodiscard]] bool contains(const Vector& z) const { return dot(normal, z) >= offset; }
  /// Same set with the first nonzero normal entry scaled to +-1.
  [[nodiscard]] Halfspace canonical() const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// {z : normal^T z == offset}.
struct Hyperplane {
  Vector normal;
  Rational offset;

  [[nodiscard]] bool contains(const Vector& z) const { return dot(normal, z) == offset; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct HRep {
  std::vector<Halfspace> inequalities;
  std::vector<Hyperplane> equations;
};

/// Minkowski sum conv(vertices) + cone(rays) + span(lines). No vertices
/// means the empty set.
struct VRep {
  std::vector<Vector> vertices;
  std::vector<Vector> rays;
  std::vector<Vector> lines;
};

class Polyhedron {
 public:
  static Polyhedron from_hrep(std::size_t dim, HRep h);
  static Polyhedron from_vrep(std::size_t dim, VRep v);
  /// Caller guarantees both describe the same set.
  static Polyhedron from_both(std::size_t dim, HRep h, VRep v);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool has_hrep() const { return h_.has_value(); }
  [[nodiscard]] bool has_vrep() const { return v_.has_value(); }
  /// A missing representation is computed on first access and cached.
  [[nodiscard]] const HRep& hrep() const;
  [[nodiscard]] const VRep& vrep() const;

  [[nodiscard]] bool is_empty() const { return vrep().vertices.empty(); }
  [[nodiscard]] bool is_bounded() const { return vrep().rays.empty() && vrep().lines.empty(); }

  /// Farkas multipliers (inequalities first, then equations) proving
  /// emptiness; set by hrep_to_vrep when the set is empty.
  [[nodiscard]] const std::optional<Vector>& infeasibility_certificate() const {
    (void)vrep();
    return cert_;
  }

  /// Exact point membership using whichever representation is available (H preferred).
  [[nodiscard]] bool contains(const Vector& z) const;

 private:
  friend Polyhedron hrep_to_vrep(const Polyhedron&);
  friend Polyhedron vrep_to_hrep(const Polyhedron&);
  friend Polyhedron remove_redundant(const Polyhedron&);

  explicit Polyhedron(std::size_t dim) : dim_(dim) {}

  std::size_t dim_;
  mutable std::optional<HRep> h_;
  mutable std::optional<VRep> v_;
  mutable std::optional<Vector> cert_;
};

/// Bitset over constraint indices used as zero sets during double description.
class IndexSet {
 public:
  void set(std::size_t i);
  [[nodiscard]] bool test(std::size_t i) const;
  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool subset_of(const IndexSet& other) const;
  [[nodiscard]] IndexSet intersect(const IndexSet& other) const;
  [[nodiscard]] std::vector<std::size_t> members() const;

 private:
  std::vector<std::uint64_t> words_;
};

/// Incremental double description of a polyhedral cone in R^n, starting
/// from the whole space. Generators are primitive integer vectors.
class ConeDD {
 public:
  explicit ConeDD(std::size_t n);

  /// Intersect with {x : a^T x >= 0}.
  void add_inequality(const Vector& a);
  /// Intersect with {x : a^T x == 0}.
  void add_equation(const Vector& a);

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t constraint_count() const { return constraints_.size(); }
  [[nodiscard]] std::vector<Vector> rays() const;
  [[nodiscard]] std::vector<Vector> lines() const;

 private:
  using IntVec = std::vector<mpz_class>;
  struct Generator {
    IntVec v;
    IndexSet zero;
  };

  void add(const Vector& a, bool equation);
  [[nodiscard]] bool adjacent(std::size_t i, std::size_t j, const IndexSet& common) const;

  std::size_t n_;
  std::vector<IntVec> constraints_;
  std::vector<Generator> rays_;
  std::vector<IntVec> lines_;
};

/// Incremental double description of an affine polyhedron in R^d, via the
/// homogenization {(x0, x) : x0 >= 0, a^T x - b x0 >= 0}.
class DoubleDescription {
 public:
  explicit DoubleDescription(std::size_t d);

  void add_inequality(const Halfspace& h);
  void add_equation(const Hyperplane& h);

  [[nodiscard]] std::size_t dim() const { return d_; }
  /// Vertices sorted lexicographically; rays primitive and sorted; lines in RREF.
  [[nodiscard]] VRep vrep() const;

 private:
  std::size_t d_;
  ConeDD cone_;
};

/// Computes the V-representation (and an emptiness certificate when empty).
Polyhedron hrep_to_vrep(const Polyhedron& p);
/// Computes an irredundant H-representation: facets plus equations in RREF.
Polyhedron vrep_to_hrep(const Polyhedron& p);
/// Irredundant H-representation certified by one LP per constraint. Implicit
/// equalities become equations. Output sorted by canonical normal.
Polyhedron remove_redundant(const Polyhedron& p);
/// Set equality by mutual containment of generators in constraints.
bool poly_equal(const Polyhedron& a, const Polyhedron& b);
/// inner is a subset of outer.
bool poly_contains(const Polyhedron& outer, const Polyhedron& inner);

/// Intersection of halfspaces with both representations computed.
Polyhedron intersect_halfspaces(std::size_t dim, const std::vector<Halfspace>& halfspaces);

/// Canonical RREF of an equation system [normal | offset].
std::vector<Hyperplane> canonical_equations(const std::vector<Hyperplane>& eqs);

}  // namespace cquant
