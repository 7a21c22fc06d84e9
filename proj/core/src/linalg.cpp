#include "cquant/linalg.hpp"

#include <utility>

namespace cquant::linalg {

namespace {

// In-place forward elimination to reduced row echelon form; returns rank.
std::size_t eliminate(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(Matrix rows) { return eliminate(rows); }

Matrix rref(Matrix rows) {
  const std::size_t r = eliminate(rows);
  rows.resize(r);
  return rows;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector primitive(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  Vector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(g == 0 ? n : mpz_class(n / g));
  return out;
}

Vector normalize_first(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      const Rational s = x.abs();
      Vector out;
      out.reserve(v.size());
      for (const auto& y : v) out.push_back(y / s);
      return out;
    }
  }
  return v;
}

}  // namespace cquant::linalg
