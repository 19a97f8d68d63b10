#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pencilrank {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& numerator, const Integer& denominator);

  explicit Rational(mpq_class value);

  /// Accepts "p/q", integers, and finite decimals such as "-1.25" or "3e-2".
  static Rational parse(std::string_view text);

  /// Exact value of a finite double.
  static Rational from_double(double value);

  const mpq_class& raw() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(::abs(q_)); }
  Rational inverse() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;
  /// Fixed-point rendering with `digits` digits after the decimal point (truncated toward zero).
  std::string to_decimal(int digits) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Smallest-denominator rational within `tolerance` of `value` (continued fractions),
/// limited to denominators up to `max_denominator`.
bool rational_reconstruction(double value, double tolerance, long max_denominator, Rational& out);

}  // namespace pencilrank

template <>
struct std::hash<pencilrank::Rational> {
  std::size_t operator()(const pencilrank::Rational& r) const noexcept { return r.hash(); }
};
