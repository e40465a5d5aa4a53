#include "gossamer/discrete_sum.hpp"

#include <vector>

#include "gossamer/errors.hpp"
#include "gossamer/riemann.hpp"

namespace gossamer {

namespace {

void require_integer_endpoint(const GossamerNumber& x, const char* where) {
  if (x.is_real() && !x.standard_part().is_integer()) {
    throw DomainError(std::string(where) + ": endpoint " + x.str() + " is not an integer");
  }
}

}  // namespace

ClosedFormSum indefinite_sum(const Polynomial& g) {
  Polynomial G;
  const auto c = g.coefficients();
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (!c[p].is_zero()) G += faulhaber(static_cast<unsigned>(p)) * c[p];
  }
  return {g, G};
}

GossamerNumber sum_at_point(const ClosedFormSum& s, const GossamerNumber& a) { return eval(s.point_function, a); }

GossamerNumber lower_sum_at_point(const ClosedFormSum& s, const GossamerNumber& a) { return -sum_at_point(s, a); }

Rational sum_interval_bruteforce(const Polynomial& g, std::int64_t a, std::int64_t b) {
  if (a > b) throw DomainError("sum_interval_bruteforce: a > b");
  Rational total(0);
  for (std::int64_t k = a; k <= b; ++k) total += eval(g, Rational(k));
  return total;
}

SumFtc sum_ftc(const Polynomial& g, const GossamerNumber& a, const GossamerNumber& b) {
  require_integer_endpoint(a, "sum_ftc");
  require_integer_endpoint(b, "sum_ftc");
  if (a > b) throw DomainError("sum_ftc: lower endpoint " + a.str() + " exceeds upper endpoint " + b.str());
  const ClosedFormSum s = indefinite_sum(g);
  const GossamerNumber before = a - GossamerNumber(1);
  SumFtc out;
  out.value = sum_at_point(s, b) - sum_at_point(s, before);
  out.negative_argument = before.sign() < 0 || b.sign() < 0;
  if (a.is_real() && b.is_real()) {
    const mpz_class lo = a.standard_part().numerator();
    const mpz_class hi = b.standard_part().numerator();
    if (lo.fits_slong_p() && hi.fits_slong_p()) {
      out.oracle_match = out.value == GossamerNumber(sum_interval_bruteforce(g, lo.get_si(), hi.get_si()));
    }
  }
  return out;
}

GossamerNumber sum_ftc_half_open(const Polynomial& g, const GossamerNumber& a, const GossamerNumber& b) {
  if (a > b) throw DomainError("sum_ftc_half_open: lower endpoint exceeds upper endpoint");
  const ClosedFormSum s = indefinite_sum(g);
  return sum_at_point(s, b) - sum_at_point(s, a);
}

SumIntegralBridge sum_to_integral_bridge(const Polynomial& g, std::int64_t a, std::int64_t b) {
  if (a > b) throw DomainError("sum_to_integral_bridge: a > b");
  std::vector<Rational> breakpoints;
  std::vector<Rational> levels{Rational(0)};
  for (std::int64_t k = a; k <= b; ++k) {
    breakpoints.push_back(Rational(k));
    levels.push_back(eval(g, Rational(k)));
  }
  breakpoints.push_back(Rational(b + 1));
  levels.push_back(Rational(0));
  SumIntegralBridge out{StepFunction(std::move(breakpoints), std::move(levels)), Rational(0), false};
  out.integral = area(out.step, Rational(a), Rational(b + 1));
  out.equal = out.integral == sum_interval_bruteforce(g, a, b);
  return out;
}

}  // namespace gossamer
