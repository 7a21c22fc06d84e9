#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used throughout the solver path.
 *
 * Thin value wrapper around GMP's mpq_class. Every constructor and every
 * arithmetic result is canonical: lowest terms, positive denominator, zero
 * stored as 0/1. Wrapping (rather than aliasing mpq_class) keeps gmpxx
 * expression templates out of user code, so `auto x = a + b;` is always a
 * Rational.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cquant {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}                  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : value_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(static_cast<long>(v)) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(long) == sizeof(long long));
  }
  Rational(const mpz_class& v) : value_(v) {}     // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// n/d in lowest terms. Throws std::domain_error when d == 0.
  Rational(const mpz_class& n, const mpz_class& d);
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

  /// Accepts "a", "a/b", "-a/b", "a.bc", "-.5", "1e-3" style decimals.
  /// Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  /// Smallest integer z with z >= value.
  [[nodiscard]] mpz_class ceil() const;
  /// Largest integer z with z <= value.
  [[nodiscard]] mpz_class floor() const;

  [[nodiscard]] double to_double() const { return value_.get_d(); }
  /// "a" for integers, "a/b" otherwise.
  [[nodiscard]] std::string str() const;
  /// Fixed-point decimal approximation with the given number of digits.
  [[nodiscard]] std::string decimal(int digits = 10) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

Rational dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace cquant
