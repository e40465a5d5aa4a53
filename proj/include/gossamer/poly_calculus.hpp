#pragma once

#include "gossamer/gossamer_number.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/rational.hpp"

namespace gossamer {

/// Both sides of an integral identity evaluated independently.
struct IdentityCheck {
  GossamerNumber lhs;
  GossamerNumber rhs;
  bool equal = false;
};

struct FtcInverseCheck {
  GossamerNumber difference_quotient;
  Rational recovered;
  bool equal = false;
};

/// The two orders of limits in the derivative-of-accumulation argument.
struct OrderSwap {
  GossamerNumber h_first;  // h -> 0 before n -> inf: h * p(x)
  GossamerNumber n_first;  // n -> inf before h -> 0: h * integral_0^1 p
  bool differ = false;
};

/// P(b) - P(a) with P the antiderivative of p. Endpoints may be infinite or
/// infinitesimal; a == b gives 0.
GossamerNumber definite_integral(const Polynomial& p, const GossamerNumber& a, const GossamerNumber& b);
Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b);

/// Accumulation function F(x) = integral_a^x p, i.e. antiderivative shifted so F(a) = 0.
Polynomial accumulation(const Polynomial& p, const Rational& a);

/// lhs = integral_a^b p(x) dx, rhs = alpha * integral_{a/alpha}^{b/alpha} p(alpha v) dv.
/// Throws DomainError when alpha is zero.
IdentityCheck scale_integral_identity(const Polynomial& p, const Rational& a, const Rational& b,
                                      const Rational& alpha);

/// lhs = integral_a^b p(x) dx, rhs = integral_{a-c}^{b-c} p(x + c) dx.
IdentityCheck shift_integral_identity(const Polynomial& p, const Rational& a, const Rational& b, const Rational& c);

/// Difference quotient (F(x+h) - F(x)) / h of the accumulation function from a,
/// evaluated exactly for infinitesimal h; its standard part must recover p(x).
FtcInverseCheck ftc_inverse_check(const Polynomial& p, const Rational& a, const Rational& x, const GossamerNumber& h);

OrderSwap order_swap_demo(const Polynomial& p, const Rational& x, const GossamerNumber& h);

}  // namespace gossamer
