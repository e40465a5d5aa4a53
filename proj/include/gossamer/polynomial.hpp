#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gossamer/gossamer_number.hpp"
#include "gossamer/rational.hpp"

namespace gossamer {

/// Dense univariate polynomial over Q. coefficients()[i] multiplies x^i;
/// trailing zeros are trimmed so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// c * x^degree
  static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));

  /// Parses "3/2*x^2 - x + 5". Any single-letter variable is accepted, but one
  /// expression may use only one.
  static Polynomial parse(std::string_view text);

  std::span<const Rational> coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t degree) const;
  bool is_zero() const { return coefficients_.empty(); }
  /// Degree; 0 for constants including the zero polynomial.
  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }

  Rational operator()(const Rational& x) const;
  GossamerNumber operator()(const GossamerNumber& x) const;

  /// Substitutes inner for x: this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;

  std::string str(char variable = 'x') const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Horner evaluation; a rational argument gives a rational (pure real) result.
GossamerNumber eval(const Polynomial& p, const GossamerNumber& x);
Rational eval(const Polynomial& p, const Rational& x);

Polynomial derivative(const Polynomial& p);
/// Antiderivative with zero constant term.
Polynomial antiderivative(const Polynomial& p);

}  // namespace gossamer
