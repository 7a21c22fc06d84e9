#include "cquant/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "cquant/error.hpp"
#include "cquant/linalg.hpp"
#include "cquant/lp.hpp"

namespace cquant {

namespace {

using IntVec = std::vector<mpz_class>;

IntVec to_primitive_ints(const Vector& a) {
  IntVec out;
  out.reserve(a.size());
  for (const auto& x : linalg::primitive(a)) out.push_back(x.numerator());
  return out;
}

void make_primitive(IntVec& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

mpz_class idot(const IntVec& a, const IntVec& b) {
  mpz_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  }
  return acc;
}

// alpha * x - beta * y, made primitive.
IntVec combine(const mpz_class& alpha, const IntVec& x, const mpz_class& beta, const IntVec& y) {
  IntVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i] - beta * y[i];
  make_primitive(out);
  return out;
}

Vector to_rationals(const IntVec& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

void check_dim(const Vector& v, std::size_t d, const char* what) {
  if (v.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has dimension " +
                                                  std::to_string(v.size()) + ", expected " +
                                                  std::to_string(d));
  }
}

// Reduces v modulo the row space of RREF rows (zeroes every pivot column).
Vector reduce_modulo(Vector v, const Matrix& rref_rows) {
  for (const auto& row : rref_rows) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size() || v[pivot].is_zero()) continue;
    const Rational f = v[pivot];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
  return v;
}

// Reduces a halfspace modulo equations given in canonical RREF form.
Halfspace reduce_halfspace(Halfspace h, const std::vector<Hyperplane>& eqs) {
  for (const auto& e : eqs) {
    std::size_t pivot = 0;
    while (pivot < e.normal.size() && e.normal[pivot].is_zero()) ++pivot;
    if (pivot == e.normal.size() || h.normal[pivot].is_zero()) continue;
    const Rational f = h.normal[pivot];
    for (std::size_t j = 0; j < h.normal.size(); ++j) {
      if (!e.normal[j].is_zero()) h.normal[j] -= f * e.normal[j];
    }
    h.offset -= f * e.offset;
  }
  return h;
}

// Free variables x in R^d constrained by the H-representation.
LinearProgram lp_over(std::size_t d, const std::vector<Halfspace>& ineqs,
                      const std::vector<Hyperplane>& eqs) {
  LinearProgram lp(d);
  for (std::size_t j = 0; j < d; ++j) lp.set_free(j);
  for (const auto& h : ineqs) lp.add_row(h.normal, RowSense::GreaterEqual, h.offset);
  for (const auto& e : eqs) lp.add_row(e.normal, RowSense::Equal, e.offset);
  return lp;
}

std::optional<Vector> farkas_certificate(std::size_t d, const HRep& h) {
  const std::size_t mi = h.inequalities.size();
  const std::size_t me = h.equations.size();
  LinearProgram lp(mi + me);
  for (std::size_t k = 0; k < me; ++k) lp.set_free(mi + k);
  for (std::size_t j = 0; j < d; ++j) {
    Vector row(mi + me);
    for (std::size_t i = 0; i < mi; ++i) row[i] = h.inequalities[i].normal[j];
    for (std::size_t k = 0; k < me; ++k) row[mi + k] = h.equations[k].normal[j];
    lp.add_row(std::move(row), RowSense::Equal, Rational(0));
  }
  Vector row(mi + me);
  for (std::size_t i = 0; i < mi; ++i) row[i] = h.inequalities[i].offset;
  for (std::size_t k = 0; k < me; ++k) row[mi + k] = h.equations[k].offset;
  lp.add_row(std::move(row), RowSense::Equal, Rational(1));
  const LpOutcome out = simplex_solve(lp);
  if (out.status != LpStatus::Optimal) return std::nullopt;
  return out.primal;
}

void sort_unique(std::vector<Vector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace

// ---------------------------------------------------------------------------

Halfspace Halfspace::canonical() const {
  for (const auto& x : normal) {
    if (!x.is_zero()) {
      const Rational s = x.abs();
      Halfspace out{Vector{}, offset / s};
      out.normal.reserve(normal.size());
      for (const auto& y : normal) out.normal.push_back(y / s);
      return out;
    }
  }
  return *this;
}

// ---------------------------------------------------------------------------

void IndexSet::set(std::size_t i) {
  if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool IndexSet::test(std::size_t i) const {
  return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U);
}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IndexSet::subset_of(const IndexSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const std::uint64_t o = k < other.words_.size() ? other.words_[k] : 0;
    if ((words_[k] & ~o) != 0) return false;
  }
  return true;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet out;
  out.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t k = 0; k < out.words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
  return out;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ConeDD::ConeDD(std::size_t n) : n_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    lines_.push_back(std::move(e));
  }
}

void ConeDD::add_inequality(const Vector& a) { add(a, false); }
void ConeDD::add_equation(const Vector& a) { add(a, true); }

void ConeDD::add(const Vector& a, bool equation) {
  check_dim(a, n_, "constraint");
  const std::size_t k = constraints_.size();
  IntVec h = to_primitive_ints(a);
  constraints_.push_back(h);

  // Lineality step: the new constraint cuts the lineality space.
  for (std::size_t s = 0; s < lines_.size(); ++s) {
    mpz_class alpha = idot(h, lines_[s]);
    if (sgn(alpha) == 0) continue;
    IntVec pivot = std::move(lines_[s]);
    lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(s));
    if (sgn(alpha) < 0) {
      for (auto& x : pivot) x = -x;
      alpha = -alpha;
    }
    for (auto& l : lines_) {
      const mpz_class beta = idot(h, l);
      if (sgn(beta) != 0) l = combine(alpha, l, beta, pivot);
    }
    for (auto& r : rays_) {
      const mpz_class beta = idot(h, r.v);
      if (sgn(beta) != 0) r.v = combine(alpha, r.v, beta, pivot);
      r.zero.set(k);
    }
    if (!equation) {
      Generator g{std::move(pivot), IndexSet{}};
      for (std::size_t i = 0; i < k; ++i) g.zero.set(i);
      rays_.push_back(std::move(g));
    }
    return;
  }

  std::vector<int> sign(rays_.size());
  std::vector<mpz_class> value(rays_.size());
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    value[i] = idot(h, rays_[i].v);
    sign[i] = sgn(value[i]);
  }

  std::vector<Generator> next;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (sign[i] == 0) {
      next.push_back(rays_[i]);
      next.back().zero.set(k);
    } else if (sign[i] > 0 && !equation) {
      next.push_back(rays_[i]);
    }
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (sign[i] <= 0) continue;
    for (std::size_t j = 0; j < rays_.size(); ++j) {
      if (sign[j] >= 0) continue;
      IndexSet common = rays_[i].zero.intersect(rays_[j].zero);
      if (!adjacent(i, j, common)) continue;
      // value[i] > 0 > value[j]: the combination lands on the hyperplane.
      Generator g{combine(value[i], rays_[j].v, value[j], rays_[i].v), std::move(common)};
      g.zero.set(k);
      next.push_back(std::move(g));
    }
  }
  rays_ = std::move(next);
}

bool ConeDD::adjacent(std::size_t i, std::size_t j, const IndexSet& common) const {
  const long need = static_cast<long>(n_) - static_cast<long>(lines_.size()) - 2;
  if (static_cast<long>(common.count()) < need) return false;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (r == i || r == j) continue;
    if (common.subset_of(rays_[r].zero)) return false;
  }
  if (need <= 0) return true;
  Matrix active;
  for (std::size_t c : common.members()) active.push_back(to_rationals(constraints_[c]));
  return static_cast<long>(linalg::rank(std::move(active))) == need;
}

std::vector<Vector> ConeDD::rays() const {
  std::vector<Vector> out;
  out.reserve(rays_.size());
  for (const auto& r : rays_) out.push_back(to_rationals(r.v));
  return out;
}

std::vector<Vector> ConeDD::lines() const {
  std::vector<Vector> out;
  out.reserve(lines_.size());
  for (const auto& l : lines_) out.push_back(to_rationals(l));
  return out;
}

// ---------------------------------------------------------------------------

DoubleDescription::DoubleDescription(std::size_t d) : d_(d), cone_(d + 1) {
  Vector x0(d + 1);
  x0[0] = Rational(1);
  cone_.add_inequality(x0);
}

void DoubleDescription::add_inequality(const Halfspace& h) {
  check_dim(h.normal, d_, "halfspace normal");
  Vector a;
  a.reserve(d_ + 1);
  a.push_back(-h.offset);
  a.insert(a.end(), h.normal.begin(), h.normal.end());
  cone_.add_inequality(a);
}

void DoubleDescription::add_equation(const Hyperplane& h) {
  check_dim(h.normal, d_, "hyperplane normal");
  Vector a;
  a.reserve(d_ + 1);
  a.push_back(-h.offset);
  a.insert(a.end(), h.normal.begin(), h.normal.end());
  cone_.add_equation(a);
}

VRep DoubleDescription::vrep() const {
  VRep out;
  Matrix lines;
  for (const auto& l : cone_.lines()) lines.emplace_back(l.begin() + 1, l.end());
  lines = linalg::rref(std::move(lines));
  for (const auto& r : cone_.rays()) {
    Vector tail(r.begin() + 1, r.end());
    if (r[0].sign() > 0) {
      for (auto& x : tail) x /= r[0];
      out.vertices.push_back(reduce_modulo(std::move(tail), lines));
    } else {
      tail = linalg::primitive(reduce_modulo(std::move(tail), lines));
      if (!linalg::is_zero(tail)) out.rays.push_back(std::move(tail));
    }
  }
  if (out.vertices.empty()) {
    out.rays.clear();
    return out;
  }
  sort_unique(out.vertices);
  sort_unique(out.rays);
  out.lines = std::move(lines);
  return out;
}

// ---------------------------------------------------------------------------

Polyhedron Polyhedron::from_hrep(std::size_t dim, HRep h) {
  for (const auto& x : h.inequalities) check_dim(x.normal, dim, "halfspace normal");
  for (const auto& x : h.equations) check_dim(x.normal, dim, "hyperplane normal");
  Polyhedron p(dim);
  p.h_ = std::move(h);
  return p;
}

Polyhedron Polyhedron::from_vrep(std::size_t dim, VRep v) {
  for (const auto& x : v.vertices) check_dim(x, dim, "vertex");
  for (const auto& x : v.rays) check_dim(x, dim, "ray");
  for (const auto& x : v.lines) check_dim(x, dim, "line");
  Polyhedron p(dim);
  p.v_ = std::move(v);
  return p;
}

Polyhedron Polyhedron::from_both(std::size_t dim, HRep h, VRep v) {
  Polyhedron p = from_hrep(dim, std::move(h));
  Polyhedron q = from_vrep(dim, std::move(v));
  p.v_ = std::move(q.v_);
  return p;
}

const HRep& Polyhedron::hrep() const {
  if (!h_) h_ = std::move(vrep_to_hrep(*this).h_);
  return *h_;
}

const VRep& Polyhedron::vrep() const {
  if (!v_) {
    Polyhedron full = hrep_to_vrep(*this);
    v_ = std::move(full.v_);
    cert_ = std::move(full.cert_);
  }
  return *v_;
}

bool Polyhedron::contains(const Vector& z) const {
  check_dim(z, dim_, "point");
  if (h_) {
    for (const auto& h : h_->inequalities) {
      if (!h.contains(z)) return false;
    }
    for (const auto& e : h_->equations) {
      if (!e.contains(z)) return false;
    }
    return !v_ || !v_->vertices.empty();
  }
  const auto& v = *v_;
  if (v.vertices.empty()) return false;
  // z = sum l_i v_i + sum m_j r_j + sum n_k l_k, l >= 0, sum l = 1, m >= 0.
  const std::size_t nv = v.vertices.size();
  const std::size_t nr = v.rays.size();
  const std::size_t nl = v.lines.size();
  LinearProgram lp(nv + nr + nl);
  for (std::size_t k = 0; k < nl; ++k) lp.set_free(nv + nr + k);
  for (std::size_t c = 0; c < dim_; ++c) {
    Vector row(nv + nr + nl);
    for (std::size_t i = 0; i < nv; ++i) row[i] = v.vertices[i][c];
    for (std::size_t i = 0; i < nr; ++i) row[nv + i] = v.rays[i][c];
    for (std::size_t i = 0; i < nl; ++i) row[nv + nr + i] = v.lines[i][c];
    lp.add_row(std::move(row), RowSense::Equal, z[c]);
  }
  Vector sum(nv + nr + nl);
  for (std::size_t i = 0; i < nv; ++i) sum[i] = Rational(1);
  lp.add_row(std::move(sum), RowSense::Equal, Rational(1));
  return simplex_solve(lp).status == LpStatus::Optimal;
}

std::vector<Hyperplane> canonical_equations(const std::vector<Hyperplane>& eqs) {
  if (eqs.empty()) return {};
  Matrix m;
  for (const auto& e : eqs) {
    Vector row = e.normal;
    row.push_back(e.offset);
    m.push_back(std::move(row));
  }
  std::vector<Hyperplane> out;
  for (auto& row : linalg::rref(std::move(m))) {
    Rational off = row.back();
    row.pop_back();
    out.push_back(Hyperplane{std::move(row), std::move(off)});
  }
  return out;
}

Polyhedron hrep_to_vrep(const Polyhedron& p) {
  const HRep& h = p.hrep();
  DoubleDescription dd(p.dim());
  for (const auto& e : h.equations) dd.add_equation(e);
  for (const auto& x : h.inequalities) dd.add_inequality(x);
  Polyhedron out = p;
  out.v_ = dd.vrep();
  out.cert_.reset();
  if (out.v_->vertices.empty()) out.cert_ = farkas_certificate(p.dim(), h);
  return out;
}

Polyhedron vrep_to_hrep(const Polyhedron& p) {
  const VRep& v = p.vrep();
  const std::size_t d = p.dim();
  Polyhedron out = p;
  HRep h;
  if (v.vertices.empty()) {
    Vector e(d);
    if (d > 0) e[0] = Rational(1);
    h.inequalities.push_back(Halfspace{e, Rational(1)});
    for (auto& x : e) x = -x;
    h.inequalities.push_back(Halfspace{e, Rational(0)});
    out.h_ = std::move(h);
    return out;
  }
  ConeDD cone(d + 1);
  for (const auto& x : v.vertices) {
    Vector g{Rational(1)};
    g.insert(g.end(), x.begin(), x.end());
    cone.add_inequality(g);
  }
  for (const auto& r : v.rays) {
    Vector g{Rational(0)};
    g.insert(g.end(), r.begin(), r.end());
    cone.add_inequality(g);
  }
  for (const auto& l : v.lines) {
    Vector g{Rational(0)};
    g.insert(g.end(), l.begin(), l.end());
    cone.add_equation(g);
  }
  std::vector<Hyperplane> eqs;
  for (const auto& l : cone.lines()) {
    Vector a(l.begin() + 1, l.end());
    eqs.push_back(Hyperplane{std::move(a), -l[0]});
  }
  h.equations = canonical_equations(eqs);
  for (const auto& r : cone.rays()) {
    Halfspace hs{Vector(r.begin() + 1, r.end()), -r[0]};
    hs = reduce_halfspace(std::move(hs), h.equations);
    if (linalg::is_zero(hs.normal)) continue;
    h.inequalities.push_back(hs.canonical());
  }
  std::sort(h.inequalities.begin(), h.inequalities.end());
  h.inequalities.erase(std::unique(h.inequalities.begin(), h.inequalities.end()),
                       h.inequalities.end());
  out.h_ = std::move(h);
  return out;
}

Polyhedron remove_redundant(const Polyhedron& p) {
  const HRep& h = p.hrep();
  const std::size_t d = p.dim();

  if (simplex_solve(lp_over(d, h.inequalities, h.equations)).status == LpStatus::Infeasible) {
    // Every empty set gets the same two-constraint description.
    Polyhedron out = vrep_to_hrep(Polyhedron::from_vrep(d, VRep{}));
    out.cert_ = farkas_certificate(d, out.hrep());
    return out;
  }

  // Implicit equalities: max a^T x == b over the set.
  std::vector<Hyperplane> eqs = h.equations;
  std::vector<Halfspace> rest;
  for (const auto& x : h.inequalities) {
    LinearProgram lp = lp_over(d, h.inequalities, h.equations);
    lp.sense = ObjectiveSense::Maximize;
    lp.objective = x.normal;
    const LpOutcome out = simplex_solve(lp);
    if (out.status == LpStatus::Optimal && out.value == x.offset) {
      eqs.push_back(Hyperplane{x.normal, x.offset});
    } else {
      rest.push_back(x);
    }
  }
  eqs = canonical_equations(eqs);

  std::vector<Halfspace> cand;
  for (auto& x : rest) {
    Halfspace r = reduce_halfspace(x, eqs);
    if (linalg::is_zero(r.normal)) continue;
    cand.push_back(r.canonical());
  }
  std::sort(cand.begin(), cand.end());
  // Same normal: only the largest offset can be irredundant.
  std::vector<Halfspace> uniq;
  for (auto& x : cand) {
    if (!uniq.empty() && uniq.back().normal == x.normal) {
      uniq.back() = std::move(x);
    } else {
      uniq.push_back(std::move(x));
    }
  }

  std::vector<bool> keep(uniq.size(), true);
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<Halfspace> others;
    for (std::size_t j = 0; j < uniq.size(); ++j) {
      if (j != i && keep[j]) others.push_back(uniq[j]);
    }
    LinearProgram lp = lp_over(d, others, eqs);
    lp.objective = uniq[i].normal;
    const LpOutcome out = simplex_solve(lp);
    if (out.status == LpStatus::Optimal && out.value >= uniq[i].offset) keep[i] = false;
  }

  HRep result;
  result.equations = std::move(eqs);
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    if (keep[i]) result.inequalities.push_back(std::move(uniq[i]));
  }
  Polyhedron out = p;
  out.h_ = std::move(result);
  return out;
}

namespace {

Polyhedron with_both(const Polyhedron& p) {
  Polyhedron q = p.has_vrep() ? p : hrep_to_vrep(p);
  return q.has_hrep() ? q : vrep_to_hrep(q);
}

}  // namespace

bool poly_contains(const Polyhedron& outer_in, const Polyhedron& inner_in) {
  if (outer_in.dim() != inner_in.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "poly_contains: ambient dimensions differ");
  }
  const Polyhedron inner = inner_in.has_vrep() ? inner_in : hrep_to_vrep(inner_in);
  const Polyhedron outer = with_both(outer_in);
  const VRep& v = inner.vrep();
  if (v.vertices.empty()) return true;
  if (outer.is_empty()) return false;
  const HRep& h = outer.hrep();
  for (const auto& x : v.vertices) {
    for (const auto& hs : h.inequalities) {
      if (!hs.contains(x)) return false;
    }
    for (const auto& e : h.equations) {
      if (!e.contains(x)) return false;
    }
  }
  for (const auto& r : v.rays) {
    for (const auto& hs : h.inequalities) {
      if (dot(hs.normal, r).sign() < 0) return false;
    }
    for (const auto& e : h.equations) {
      if (!dot(e.normal, r).is_zero()) return false;
    }
  }
  for (const auto& l : v.lines) {
    for (const auto& hs : h.inequalities) {
      if (!dot(hs.normal, l).is_zero()) return false;
    }
    for (const auto& e : h.equations) {
      if (!dot(e.normal, l).is_zero()) return false;
    }
  }
  return true;
}

bool poly_equal(const Polyhedron& a, const Polyhedron& b) {
  const Polyhedron fa = with_both(a);
  const Polyhedron fb = with_both(b);
  return poly_contains(fa, fb) && poly_contains(fb, fa);
}

Polyhedron intersect_halfspaces(std::size_t dim, const std::vector<Halfspace>& halfspaces) {
  return hrep_to_vrep(Polyhedron::from_hrep(dim, HRep{halfspaces, {}}));
}

}  // namespace cquant
