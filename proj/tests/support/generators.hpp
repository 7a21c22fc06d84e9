#pragma once

// Random instance generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <vector>

#include "cquant/core.hpp"
#include "cquant/error.hpp"
#include "cquant/polyhedra.hpp"

namespace cquant::testing {

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// n/den with den in [1, max_den] and |n/den| <= bound.
  Rational rational(long bound, long max_den) {
    const long den = integer(1, max_den);
    return Rational(integer(-bound * den, bound * den), den);
  }

  Vector vector(std::size_t d, long bound, long max_den) {
    Vector v;
    for (std::size_t k = 0; k < d; ++k) v.push_back(rational(bound, max_den));
    return v;
  }

  DataCloud cloud(std::size_t n, std::size_t d, long bound, long max_den) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(vector(d, bound, max_den));
    return DataCloud(std::move(pts));
  }

  /// Level p in (0,1) with Np not an integer.
  Rational level(std::size_t n) {
    for (;;) {
      const long den = integer(2, static_cast<long>(3 * n + 3));
      const Rational p(integer(1, den - 1), den);
      if (!(p * Rational(static_cast<unsigned long>(n))).is_integer()) return p;
    }
  }

  /// Pointed cone with nonempty interior from a few small integer generators.
  Cone cone(std::size_t d) {
    for (;;) {
      Matrix y;
      const std::size_t r = index(d, d + 2);
      for (std::size_t i = 0; i < r; ++i) y.push_back(vector(d, 3, 1));
      try {
        return validate_cone(y);
      } catch (const Error&) {
      }
    }
  }

  /// Random H-description: a box-bounded polytope, or an unbounded polyhedron.
  std::vector<Halfspace> halfspaces(std::size_t d, bool bounded) {
    std::vector<Halfspace> hs;
    if (bounded) {
      for (std::size_t k = 0; k < d; ++k) {
        Vector e(d), f(d);
        e[k] = 1;
        f[k] = -1;
        hs.push_back({e, Rational(-integer(1, 4))});
        hs.push_back({f, Rational(-integer(1, 4))});
      }
    }
    const std::size_t m = index(1, d + 4);
    for (std::size_t i = 0; i < m; ++i) hs.push_back({vector(d, 3, 1), rational(3, 2)});
    return hs;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline DataCloud translate(const DataCloud& x, const Vector& b) {
  std::vector<Vector> pts;
  for (const auto& p : x.points()) {
    Vector q = p;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += b[k];
    pts.push_back(std::move(q));
  }
  return DataCloud(std::move(pts));
}

inline DataCloud scale(const DataCloud& x, const Rational& a) {
  std::vector<Vector> pts;
  for (const auto& p : x.points()) {
    Vector q = p;
    for (auto& v : q) v *= a;
    pts.push_back(std::move(q));
  }
  return DataCloud(std::move(pts));
}

inline Polyhedron translate(const Polyhedron& p, const Vector& b) {
  VRep v = p.vrep();
  for (auto& x : v.vertices)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += b[k];
  return Polyhedron::from_vrep(p.dim(), std::move(v));
}

inline Polyhedron scale(const Polyhedron& p, const Rational& a) {
  VRep v = p.vrep();
  for (auto& x : v.vertices)
    for (auto& c : x) c *= a;
  return Polyhedron::from_vrep(p.dim(), std::move(v));
}

}  // namespace cquant::testing

namespace cquant {
// Readable gtest failure output.
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }
}  // namespace cquant
