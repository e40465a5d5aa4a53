#include "gossamer/rational.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "gossamer/errors.hpp"

namespace gossamer {

static_assert(sizeof(long) == sizeof(long long), "Rational assumes an LP64 data model");

Rational::Rational(long long value) : value_(static_cast<long>(value)) {}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& integer) : value_(integer) {}

Rational Rational::parse(std::string_view text) {
  const std::string input(text);
  std::size_t pos = 0;
  std::size_t end = input.size();
  while (pos < end && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
  while (end > pos && std::isspace(static_cast<unsigned char>(input[end - 1]))) --end;
  std::string body;
  if (pos < end && (input[pos] == '+' || input[pos] == '-')) {
    if (input[pos] == '-') body.push_back('-');
    ++pos;
  }
  auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(input[pos]))) out.push_back(input[pos++]);
    if (pos == start) throw ParseError(input, pos, "digit");
  };
  std::string num = body;
  digits(num);
  std::string den = "1";
  if (pos < end && input[pos] == '/') {
    ++pos;
    den.clear();
    digits(den);
  }
  if (pos != end) throw ParseError(input, pos, "end of rational");
  mpz_class d(den, 10);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(mpz_class(num, 10), d));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace gossamer
