#include "gossamer/polynomial.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "gossamer/errors.hpp"

namespace gossamer {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coefficients_(coefficients) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> coefficients(degree + 1);
  coefficients[degree] = c;
  return Polynomial(std::move(coefficients));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t degree) const {
  return degree < coefficients_.size() ? coefficients_[degree] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GossamerNumber Polynomial::operator()(const GossamerNumber& x) const {
  GossamerNumber acc = GossamerNumber::from_terms({}, x.truncation_floor());
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + GossamerNumber(*it);
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> out(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) out[i + j] += coefficients_[i] * rhs.coefficients_[j];
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

std::string Polynomial::str(char variable) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Rational& c = coefficients_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = c.abs();
    if (k == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != Rational(1)) out += magnitude.str() + "*";
    out += variable;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : input_(text) {}

  Polynomial parse() {
    Polynomial sum;
    skip_ws();
    if (at_end()) fail("term");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    sum += term(negative);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("'+' or '-'");
      get();
      skip_ws();
      sum += term(op == '-');
    }
    return sum;
  }

 private:
  Polynomial term(bool negative) {
    Rational coefficient(1);
    std::size_t degree = 0;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = rational();
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        degree = power_of_variable();
      }
    } else if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      degree = power_of_variable();
    } else {
      fail("number or variable");
    }
    return Polynomial::monomial(degree, negative ? -coefficient : coefficient);
  }

  std::size_t power_of_variable() {
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("variable");
    const char v = peek();
    if (variable_ && *variable_ != v) fail(std::string("variable '") + *variable_ + "'");
    variable_ = v;
    get();
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    get();
    skip_ws();
    const mpz_class d = integer();
    if (!d.fits_uint_p()) fail("small non-negative degree");
    return d.get_ui();
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("digit");
    return mpz_class(std::string(input_.substr(start, pos_ - start)), 10);
  }

  Rational rational() {
    mpz_class num = integer();
    if (!at_end() && peek() == '/') {
      get();
      const std::size_t den_pos = pos_;
      mpz_class den = integer();
      if (den == 0) throw ParseError(std::string(input_), den_pos, "nonzero denominator");
      return Rational(mpq_class(num, den));
    }
    return Rational(num);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= input_.size(); }
  char peek() const { return input_[pos_]; }
  char get() { return input_[pos_++]; }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(std::string(input_), pos_, expected); }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::optional<char> variable_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolynomialParser(text).parse(); }

GossamerNumber eval(const Polynomial& p, const GossamerNumber& x) { return p(x); }
Rational eval(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(static_cast<long long>(k));
  return Polynomial(std::move(out));
}

Polynomial antiderivative(const Polynomial& p) {
  const auto c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Rational(static_cast<long long>(k + 1));
  return Polynomial(std::move(out));
}

}  // namespace gossamer
