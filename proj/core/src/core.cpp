#include "cquant/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cquant/linalg.hpp"
#include "cquant/lp.hpp"
#include "cquant/polyhedra.hpp"

namespace cquant {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::IntegralNp: return "IntegralNp";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::ContainsLine: return "ContainsLine";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::EmptyBasis: return "EmptyBasis";
    case ErrorCode::MalformedProgram: return "MalformedProgram";
    case ErrorCode::DimensionNot2: return "DimensionNot2";
    case ErrorCode::EmptySolution: return "EmptySolution";
  }
  return "Unknown";
}

DataCloud::DataCloud(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::DimensionMismatch, "data cloud needs N >= 1 points");
  dim_ = points_.front().size();
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "data cloud needs d >= 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != dim_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + std::to_string(i) + " has dimension " +
                      std::to_string(points_[i].size()) + ", expected " + std::to_string(dim_));
    }
  }
}

QuantileLevel::QuantileLevel(Rational p, std::size_t n) : p_(std::move(p)), n_(n) {
  if (n == 0) throw Error(ErrorCode::InvalidLevel, "sample size must be positive");
  if (p_.sign() <= 0 || p_ >= Rational(1)) {
    throw Error(ErrorCode::InvalidLevel, "level p=" + p_.str() + " is not in (0,1)");
  }
  const Rational np = p_ * Rational(static_cast<unsigned long>(n));
  valid_ = !np.is_integer();
  // Standard ceiling: min{z in Z : z >= Np}.
  ceil_np_ = np.ceil().get_ui();
}

void QuantileLevel::require_valid() const {
  if (!valid_) {
    throw Error(ErrorCode::IntegralNp, "N*p = " + std::to_string(n_) + "*" + p_.str() +
                                           " is an integer; uniqueness needs N*p not in Z");
  }
}

Cone Cone::orthant(std::size_t d) {
  Matrix y(d, Vector(d));
  for (std::size_t i = 0; i < d; ++i) y[i][i] = Rational(1);
  return Cone(std::move(y), d);
}

Cone validate_cone(const Matrix& generators) {
  if (generators.empty()) throw Error(ErrorCode::NotFullDimensional, "cone has no generators");
  const std::size_t d = generators.front().size();
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "cone generators have dimension 0");
  Matrix rows;
  for (const auto& g : generators) {
    if (g.size() != d) throw Error(ErrorCode::DimensionMismatch, "ragged generator matrix");
    if (!linalg::is_zero(g)) rows.push_back(g);
  }
  if (linalg::rank(rows) < d) {
    throw Error(ErrorCode::NotFullDimensional,
                "generators span fewer than " + std::to_string(d) +
                    " dimensions; the cone must have nonempty interior");
  }
  // C contains a line iff some y >= 0, e^T y = 1 has Y^T y = 0.
  const std::size_t r = rows.size();
  LinearProgram lp(r);
  for (std::size_t j = 0; j < d; ++j) {
    Vector row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = rows[i][j];
    lp.add_row(std::move(row), RowSense::Equal, Rational(0));
  }
  lp.add_row(Vector(r, Rational(1)), RowSense::Equal, Rational(1));
  if (simplex_solve(lp).status == LpStatus::Optimal) {
    throw Error(ErrorCode::ContainsLine, "cone is not free of lines");
  }
  return Cone(std::move(rows), d);
}

bool DualConeBasis::permuted() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != k) return true;
  }
  return false;
}

Vector DualConeBasis::to_internal(const Vector& external) const {
  Vector out(external.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) out[k] = external[perm_[k]];
  return out;
}

Vector DualConeBasis::to_external(const Vector& internal) const {
  Vector out(internal.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) out[perm_[k]] = internal[k];
  return out;
}

DualConeBasis make_dual_basis(const Cone& cone, const std::optional<Vector>& c) {
  const std::size_t d = cone.dim();
  const Matrix& y = cone.generators();

  Vector interior(d);
  if (c) {
    if (c->size() != d) throw Error(ErrorCode::DimensionMismatch, "interior point dimension");
    interior = *c;
  } else {
    for (const auto& g : y) {
      for (std::size_t j = 0; j < d; ++j) interior[j] += g[j];
    }
  }

  // Extreme directions of C+ = {w : Y w >= 0}; pointed since rank Y = d.
  ConeDD dual(d);
  for (const auto& g : y) dual.add_inequality(g);
  std::vector<Vector> rays = dual.rays();
  std::sort(rays.begin(), rays.end());
  for (const auto& w : rays) {
    if (dot(interior, w).sign() <= 0) {
      throw Error(ErrorCode::NotInterior,
                  "c=" + to_string(interior) + " is not an interior point of the cone");
    }
  }

  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  if (interior[d - 1].is_zero()) {
    std::size_t j = d;
    while (j > 0 && interior[j - 1].is_zero()) --j;
    if (j == 0) throw Error(ErrorCode::DegenerateBasis, "interior point is zero");
    std::swap(perm[j - 1], perm[d - 1]);
  }

  auto permute = [&](const Vector& v) {
    Vector out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = v[perm[k]];
    return out;
  };
  Matrix gens;
  gens.reserve(y.size());
  for (const auto& g : y) gens.push_back(permute(g));
  Vector internal_c = permute(interior);
  return DualConeBasis(cone, std::move(gens), std::move(internal_c), std::move(rays),
                       std::move(perm));
}

Vector project_data(const DataCloud& cloud, const Vector& w) {
  if (w.size() != cloud.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "direction has dimension " +
                                                  std::to_string(w.size()) + ", data has " +
                                                  std::to_string(cloud.dim()));
  }
  Vector out;
  out.reserve(cloud.size());
  for (const auto& x : cloud.points()) out.push_back(dot(w, x));
  return out;
}

}  // namespace cquant
