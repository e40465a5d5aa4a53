#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gossamer/rational.hpp"

namespace gossamer {

/// One series term coefficient * w^exponent.
struct Term {
  Rational exponent;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Magnitude { zero, infinitesimal, finite_appreciable, infinite };

std::string to_string(Magnitude m);

/// Truncation floor used when a value is built without an explicit one.
/// Reads GOSSAMER_TRUNC_FLOOR once (a rational such as "-24"); defaults to -16.
const Rational& default_truncation_floor();

/**
 * A gossamer number: a finite series sum(c_i * w^e_i) in the infinite unit w,
 * with exact rational coefficients and exponents.
 *
 * Terms are kept strictly descending by exponent with no zero coefficients.
 * Terms whose exponent falls below the truncation floor are discarded and
 * the value is flagged as truncated. Equality and ordering look only at the
 * terms; the floor and the flag are bookkeeping.
 *
 * Values are immutable once built.
 */
class GossamerNumber {
 public:
  GossamerNumber() : floor_(default_truncation_floor()) {}
  GossamerNumber(const Rational& real);  // NOLINT(google-explicit-constructor)
  GossamerNumber(long long real) : GossamerNumber(Rational(real)) {}  // NOLINT

  /// The infinite unit raised to a power, w^exponent.
  static GossamerNumber omega(const Rational& exponent = 1);
  static GossamerNumber monomial(const Rational& coefficient, const Rational& exponent);

  /// Builds a normalized value from arbitrary (possibly unsorted, repeated) terms.
  static GossamerNumber from_terms(std::vector<Term> terms, const Rational& floor, bool truncated = false);

  /// Parses the textual form produced by str(), e.g. "1/3 + 1/2*w^-1 - w^(1/2)".
  static GossamerNumber parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  const Rational& truncation_floor() const { return floor_; }
  bool truncated() const { return truncated_; }

  bool is_zero() const { return terms_.empty(); }
  /// True when the value is a plain rational (no w terms).
  bool is_real() const;
  int sign() const;

  /// Exponent of the leading (largest) term; empty for zero.
  std::optional<Rational> leading_exponent() const;
  /// Leading term; precondition: nonzero.
  const Term& leading_term() const;
  /// Coefficient of w^exponent (zero when absent).
  Rational coefficient(const Rational& exponent) const;

  Magnitude classify() const;
  Rational standard_part() const;
  GossamerNumber realize(const Rational& floor) const;

  /// Same terms, new floor; terms below the new floor are dropped.
  GossamerNumber with_floor(const Rational& floor) const;

  GossamerNumber abs() const;
  GossamerNumber pow(unsigned exponent) const;

  std::string str() const;

  GossamerNumber operator-() const;
  GossamerNumber& operator+=(const GossamerNumber& rhs);
  GossamerNumber& operator-=(const GossamerNumber& rhs);
  GossamerNumber& operator*=(const GossamerNumber& rhs);
  GossamerNumber& operator/=(const GossamerNumber& rhs);

  friend GossamerNumber operator+(GossamerNumber a, const GossamerNumber& b) { return a += b; }
  friend GossamerNumber operator-(GossamerNumber a, const GossamerNumber& b) { return a -= b; }
  friend GossamerNumber operator*(GossamerNumber a, const GossamerNumber& b) { return a *= b; }
  friend GossamerNumber operator/(GossamerNumber a, const GossamerNumber& b) { return a /= b; }

  friend bool operator==(const GossamerNumber& a, const GossamerNumber& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const GossamerNumber& a, const GossamerNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const GossamerNumber& g) { return os << g.str(); }

 private:
  std::vector<Term> terms_;
  Rational floor_;
  bool truncated_ = false;
};

GossamerNumber add(const GossamerNumber& a, const GossamerNumber& b);
GossamerNumber mul(const GossamerNumber& a, const GossamerNumber& b);

/// Inverse by geometric expansion: a = c*w^e*(1 + u), 1/a = c^-1 * w^-e * sum_{i=0}^{order} (-u)^i.
/// The result is flagged truncated whenever u is nonzero. Throws DivisionByZero on zero.
GossamerNumber inverse(const GossamerNumber& a, std::size_t order);
/// Inverse expanded until every retained term reaches the truncation floor.
GossamerNumber inverse(const GossamerNumber& a);

std::strong_ordering compare(const GossamerNumber& a, const GossamerNumber& b);
Magnitude classify(const GossamerNumber& a);

/// a is infinitely smaller than b in magnitude (a < b in the "much less" sense).
bool much_less(const GossamerNumber& a, const GossamerNumber& b);
/// a and b share their leading term.
bool asymptotic_sim(const GossamerNumber& a, const GossamerNumber& b);
/// a - b is zero or infinitesimal.
bool infinitely_close(const GossamerNumber& a, const GossamerNumber& b);

Rational standard_part(const GossamerNumber& a);
GossamerNumber realize(const GossamerNumber& a, const Rational& floor);

/// sum_{k=1}^{order} a_k h^k for infinitesimal h. coefficients[0] is a_1;
/// indices past the end of the list count as zero.
GossamerNumber bounded_series_sum(std::span<const Rational> coefficients, const GossamerNumber& h,
                                  std::size_t order);

/// theta = h/(1-h) expanded to the given order, i.e. h + h^2 + ... + h^(order+1).
GossamerNumber geometric_theta(const GossamerNumber& h, std::size_t order);

}  // namespace gossamer
