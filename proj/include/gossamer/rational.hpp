#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gossamer {

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value wrapper over GMP's mpq_class that avoids leaking expression
// templates into the rest of the code.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  explicit Rational(mpq_class value);
  explicit Rational(const mpz_class& integer);

  /// Parses "3", "-7", "+2/3", "-10/4" (normalized to lowest terms).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;  // throws DivisionByZero on zero
  Rational pow(unsigned exponent) const;

  /// Largest integer not greater than this value.
  mpz_class floor() const;

  double to_double() const { return value_.get_d(); }
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Binomial coefficient C(n, k) as an exact rational (zero when k > n).
Rational binomial(unsigned n, unsigned k);

}  // namespace gossamer
