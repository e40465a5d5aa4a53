#include "gossamer/gossamer_number.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "gossamer/errors.hpp"

namespace gossamer {

std::string to_string(Magnitude m) {
  switch (m) {
    case Magnitude::zero:
      return "zero";
    case Magnitude::infinitesimal:
      return "infinitesimal";
    case Magnitude::finite_appreciable:
      return "finite_appreciable";
    case Magnitude::infinite:
      return "infinite";
  }
  return "unknown";
}

const Rational& default_truncation_floor() {
  static const Rational floor = [] {
    if (const char* env = std::getenv("GOSSAMER_TRUNC_FLOOR"); env != nullptr && *env != '\0') {
      try {
        return Rational::parse(env);
      } catch (const Error&) {
        // Malformed override: fall back to the built-in default.
      }
    }
    return Rational(-16);
  }();
  return floor;
}

GossamerNumber::GossamerNumber(const Rational& real) : floor_(default_truncation_floor()) {
  if (!real.is_zero()) terms_.push_back({Rational(0), real});
}

GossamerNumber GossamerNumber::omega(const Rational& exponent) { return monomial(Rational(1), exponent); }

GossamerNumber GossamerNumber::monomial(const Rational& coefficient, const Rational& exponent) {
  return from_terms({{exponent, coefficient}}, default_truncation_floor());
}

GossamerNumber GossamerNumber::from_terms(std::vector<Term> terms, const Rational& floor, bool truncated) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  GossamerNumber out;
  out.floor_ = floor;
  out.truncated_ = truncated;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coefficient += t.coefficient;
      if (out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
      continue;
    }
    if (t.coefficient.is_zero()) continue;
    out.terms_.push_back(std::move(t));
  }
  while (!out.terms_.empty() && out.terms_.back().exponent < floor) {
    out.terms_.pop_back();
    out.truncated_ = true;
  }
  return out;
}

bool GossamerNumber::is_real() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

int GossamerNumber::sign() const { return terms_.empty() ? 0 : terms_.front().coefficient.sign(); }

std::optional<Rational> GossamerNumber::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

const Term& GossamerNumber::leading_term() const {
  if (terms_.empty()) throw ZeroMagnitude("leading_term");
  return terms_.front();
}

Rational GossamerNumber::coefficient(const Rational& exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coefficient;
    if (t.exponent < exponent) break;
  }
  return Rational(0);
}

Magnitude GossamerNumber::classify() const {
  if (terms_.empty()) return Magnitude::zero;
  const int s = terms_.front().exponent.sign();
  if (s > 0) return Magnitude::infinite;
  if (s == 0) return Magnitude::finite_appreciable;
  return Magnitude::infinitesimal;
}

Rational GossamerNumber::standard_part() const {
  if (classify() == Magnitude::infinite) throw InfinitePartPresent(str());
  return coefficient(Rational(0));
}

GossamerNumber GossamerNumber::realize(const Rational& floor) const {
  GossamerNumber out = *this;
  while (!out.terms_.empty() && out.terms_.back().exponent < floor) {
    out.terms_.pop_back();
    out.truncated_ = true;
  }
  return out;
}

GossamerNumber GossamerNumber::with_floor(const Rational& floor) const {
  GossamerNumber out = realize(floor);
  out.floor_ = floor;
  return out;
}

GossamerNumber GossamerNumber::abs() const { return sign() < 0 ? -*this : *this; }

GossamerNumber GossamerNumber::pow(unsigned exponent) const {
  GossamerNumber result = from_terms({{Rational(0), Rational(1)}}, floor_, truncated_);
  GossamerNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

GossamerNumber GossamerNumber::operator-() const {
  GossamerNumber out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

GossamerNumber& GossamerNumber::operator+=(const GossamerNumber& rhs) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto i = terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != terms_.end() && i->exponent > j->exponent)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || j->exponent > i->exponent) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coefficient + j->coefficient;
      if (!c.is_zero()) merged.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  const Rational floor = max(floor_, rhs.floor_);
  bool truncated = truncated_ || rhs.truncated_;
  while (!merged.empty() && merged.back().exponent < floor) {
    merged.pop_back();
    truncated = true;
  }
  terms_ = std::move(merged);
  floor_ = floor;
  truncated_ = truncated;
  return *this;
}

GossamerNumber& GossamerNumber::operator-=(const GossamerNumber& rhs) { return *this += -rhs; }

GossamerNumber& GossamerNumber::operator*=(const GossamerNumber& rhs) {
  const Rational floor = max(floor_, rhs.floor_);
  bool truncated = truncated_ || rhs.truncated_;
  std::map<Rational, Rational, std::greater<>> acc;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Rational e = a.exponent + b.exponent;
      if (e < floor) {
        truncated = true;
        continue;
      }
      acc[std::move(e)] += a.coefficient * b.coefficient;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.push_back({e, std::move(c)});
  }
  terms_ = std::move(out);
  floor_ = floor;
  truncated_ = truncated;
  return *this;
}

GossamerNumber& GossamerNumber::operator/=(const GossamerNumber& rhs) { return *this *= inverse(rhs); }

std::strong_ordering operator<=>(const GossamerNumber& a, const GossamerNumber& b) {
  // Sign of the leading term of a - b, found by walking both series without
  // forming the (possibly truncated) difference.
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    int s = 0;
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent > j->exponent)) {
      s = i->coefficient.sign();
      ++i;
    } else if (i == a.terms_.end() || j->exponent > i->exponent) {
      s = -j->coefficient.sign();
      ++j;
    } else {
      s = (i->coefficient - j->coefficient).sign();
      ++i;
      ++j;
    }
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void append_term(std::string& out, const Term& t, bool first) {
  const bool negative = t.coefficient.sign() < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational c = t.coefficient.abs();
  if (t.exponent.is_zero()) {
    out += c.str();
    return;
  }
  if (c != Rational(1)) out += c.str() + "*";
  out += "w";
  if (t.exponent == Rational(1)) return;
  if (t.exponent.is_integer()) {
    out += "^" + t.exponent.str();
  } else {
    out += "^(" + t.exponent.str() + ")";
  }
}

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : input_(text) {}

  GossamerNumber parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("term");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("'+' or '-'");
      get();
      skip_ws();
      terms.push_back(term(op == '-'));
    }
    return GossamerNumber::from_terms(std::move(terms), default_truncation_floor());
  }

 private:
  Term term(bool negative) {
    Rational coefficient(1);
    Rational exponent(0);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = rational();
      skip_ws();
      if (!at_end() && peek() == '*') {
        get();
        skip_ws();
        expect_unit();
        exponent = power();
      }
    } else if (!at_end() && peek() == 'w') {
      expect_unit();
      exponent = power();
    } else {
      fail("number or 'w'");
    }
    if (negative) coefficient = -coefficient;
    return {exponent, coefficient};
  }

  void expect_unit() {
    if (at_end() || peek() != 'w') fail("'w'");
    get();
  }

  Rational power() {
    skip_ws();
    if (at_end() || peek() != '^') return Rational(1);
    get();
    skip_ws();
    if (!at_end() && peek() == '(') {
      get();
      skip_ws();
      const bool neg = sign();
      Rational r = rational();
      skip_ws();
      if (at_end() || peek() != ')') fail("')'");
      get();
      return neg ? -r : r;
    }
    const bool neg = sign();
    Rational r(integer());
    return neg ? -r : r;
  }

  bool sign() {
    if (!at_end() && (peek() == '-' || peek() == '+')) return get() == '-';
    return false;
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
      if (den == 0) fail_at(den_pos, "nonzero denominator");
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
  [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& expected) const {
    throw ParseError(std::string(input_), pos, expected);
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GossamerNumber::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) append_term(out, terms_[i], i == 0);
  return out;
}

GossamerNumber GossamerNumber::parse(std::string_view text) { return SeriesParser(text).parse(); }

GossamerNumber add(const GossamerNumber& a, const GossamerNumber& b) { return a + b; }
GossamerNumber mul(const GossamerNumber& a, const GossamerNumber& b) { return a * b; }

namespace {

GossamerNumber inverse_impl(const GossamerNumber& a, std::optional<std::size_t> order) {
  if (a.is_zero()) throw DivisionByZero();
  const Term lead = a.leading_term();
  const Rational& floor = a.truncation_floor();
  // The expansion runs in the frame of the leading term; results are shifted
  // by w^-e at the end, so the relative floor is floor + e.
  const Rational relative_floor = floor + lead.exponent;
  const Rational inv_c = lead.coefficient.reciprocal();

  std::vector<Term> rest;
  for (const auto& t : a.terms().subspan(1)) rest.push_back({t.exponent - lead.exponent, -(t.coefficient * inv_c)});
  const bool has_tail = !rest.empty();
  const GossamerNumber neg_u = GossamerNumber::from_terms(std::move(rest), relative_floor);

  GossamerNumber power = GossamerNumber::from_terms({{Rational(0), Rational(1)}}, relative_floor);
  GossamerNumber series = power;
  for (std::size_t i = 1; !order || i <= *order; ++i) {
    power *= neg_u;
    if (power.is_zero()) break;
    series += power;
  }

  std::vector<Term> shifted;
  shifted.reserve(series.terms().size());
  for (const auto& t : series.terms()) shifted.push_back({t.exponent - lead.exponent, t.coefficient * inv_c});
  return GossamerNumber::from_terms(std::move(shifted), floor, series.truncated() || has_tail || a.truncated());
}

}  // namespace

GossamerNumber inverse(const GossamerNumber& a, std::size_t order) { return inverse_impl(a, order); }
GossamerNumber inverse(const GossamerNumber& a) { return inverse_impl(a, std::nullopt); }

std::strong_ordering compare(const GossamerNumber& a, const GossamerNumber& b) { return a <=> b; }

Magnitude classify(const GossamerNumber& a) { return a.classify(); }

bool much_less(const GossamerNumber& a, const GossamerNumber& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroMagnitude("much_less");
  return a.leading_term().exponent < b.leading_term().exponent;
}

bool asymptotic_sim(const GossamerNumber& a, const GossamerNumber& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroMagnitude("asymptotic_sim");
  return a.leading_term() == b.leading_term();
}

bool infinitely_close(const GossamerNumber& a, const GossamerNumber& b) {
  const Rational zero(0);
  const GossamerNumber ra = a.realize(zero);
  const GossamerNumber rb = b.realize(zero);
  return std::ranges::equal(ra.terms(), rb.terms());
}

Rational standard_part(const GossamerNumber& a) { return a.standard_part(); }

GossamerNumber realize(const GossamerNumber& a, const Rational& floor) { return a.realize(floor); }

GossamerNumber bounded_series_sum(std::span<const Rational> coefficients, const GossamerNumber& h,
                                  std::size_t order) {
  if (coefficients.empty()) throw DomainError("bounded_series_sum: coefficient list is empty");
  if (h.classify() != Magnitude::infinitesimal) {
    throw DomainError("bounded_series_sum: h = " + h.str() + " is not infinitesimal");
  }
  GossamerNumber sum = GossamerNumber::from_terms({}, h.truncation_floor());
  GossamerNumber power = h;
  for (std::size_t k = 1; k <= order && k <= coefficients.size(); ++k) {
    if (k > 1) power *= h;
    sum += GossamerNumber(coefficients[k - 1]) * power;
  }
  return sum;
}

GossamerNumber geometric_theta(const GossamerNumber& h, std::size_t order) {
  return h * inverse(GossamerNumber(1) - h, order);
}

}  // namespace gossamer
