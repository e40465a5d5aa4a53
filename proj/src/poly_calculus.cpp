#include "gossamer/poly_calculus.hpp"

#include "gossamer/errors.hpp"

namespace gossamer {

namespace {

void require_infinitesimal(const GossamerNumber& h, const char* where) {
  if (h.classify() != Magnitude::infinitesimal) {
    throw DomainError(std::string(where) + ": h = " + h.str() + " is not a nonzero infinitesimal");
  }
}

}  // namespace

GossamerNumber definite_integral(const Polynomial& p, const GossamerNumber& a, const GossamerNumber& b) {
  if (a == b) return GossamerNumber::from_terms({}, max(a.truncation_floor(), b.truncation_floor()));
  const Polynomial primitive = antiderivative(p);
  return eval(primitive, b) - eval(primitive, a);
}

Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial primitive = antiderivative(p);
  return eval(primitive, b) - eval(primitive, a);
}

Polynomial accumulation(const Polynomial& p, const Rational& a) {
  const Polynomial primitive = antiderivative(p);
  return primitive - Polynomial::constant(eval(primitive, a));
}

IdentityCheck scale_integral_identity(const Polynomial& p, const Rational& a, const Rational& b,
                                      const Rational& alpha) {
  if (alpha.is_zero()) throw DomainError("scale_integral_identity: alpha must be nonzero");
  const GossamerNumber lhs = definite_integral(p, GossamerNumber(a), GossamerNumber(b));
  // Substitute x = alpha * v, so dx = alpha dv.
  const Polynomial scaled = p.compose(Polynomial::monomial(1, alpha));
  const GossamerNumber rhs = GossamerNumber(alpha) * definite_integral(scaled, GossamerNumber(a / alpha),
                                                                       GossamerNumber(b / alpha));
  return {lhs, rhs, lhs == rhs};
}

IdentityCheck shift_integral_identity(const Polynomial& p, const Rational& a, const Rational& b, const Rational& c) {
  const GossamerNumber lhs = definite_integral(p, GossamerNumber(a), GossamerNumber(b));
  const Polynomial shifted = p.compose(Polynomial({c, Rational(1)}));
  const GossamerNumber rhs = definite_integral(shifted, GossamerNumber(a - c), GossamerNumber(b - c));
  return {lhs, rhs, lhs == rhs};
}

FtcInverseCheck ftc_inverse_check(const Polynomial& p, const Rational& a, const Rational& x, const GossamerNumber& h) {
  require_infinitesimal(h, "ftc_inverse_check");
  const Polynomial F = accumulation(p, a);
  const GossamerNumber gx(x);
  const GossamerNumber quotient = (eval(F, gx + h) - eval(F, gx)) / h;
  const Rational recovered = quotient.standard_part();
  return {quotient, recovered, recovered == eval(p, x)};
}

OrderSwap order_swap_demo(const Polynomial& p, const Rational& x, const GossamerNumber& h) {
  require_infinitesimal(h, "order_swap_demo");
  const GossamerNumber h_first = h * GossamerNumber(eval(p, x));
  const GossamerNumber n_first = h * GossamerNumber(definite_integral(p, Rational(0), Rational(1)));
  return {h_first, n_first, h_first != n_first};
}

}  // namespace gossamer
