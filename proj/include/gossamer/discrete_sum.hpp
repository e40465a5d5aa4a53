#pragma once

#include <cstdint>
#include <optional>

#include "gossamer/gossamer_number.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/rational.hpp"
#include "gossamer/step_smoothing.hpp"

namespace gossamer {

/// Summation at a point: G(n) = sum_{k=1}^{n} g(k) as a polynomial in n.
struct ClosedFormSum {
  Polynomial term;            // g(k)
  Polynomial point_function;  // G(n)
};

/// Builds G from g by Faulhaber linearity.
ClosedFormSum indefinite_sum(const Polynomial& g);

/// G(a). Infinite a is allowed and returns the symbolic gossamer value.
GossamerNumber sum_at_point(const ClosedFormSum& s, const GossamerNumber& a);
/// Lower-point notation sum_a g = -sum^a g.
GossamerNumber lower_sum_at_point(const ClosedFormSum& s, const GossamerNumber& a);

/// Direct accumulation of g(a) + ... + g(b). Throws DomainError when a > b.
Rational sum_interval_bruteforce(const Polynomial& g, std::int64_t a, std::int64_t b);

struct SumFtc {
  GossamerNumber value;
  /// Brute-force comparison when both ends are finite; vacuously true otherwise.
  bool oracle_match = true;
  /// Set when G was evaluated at a negative integer (outside the 1..n construction).
  bool negative_argument = false;
};

/// Closed interval sum_{k=a}^{b} g(k) = G(b) - G(a-1). Endpoints are integers
/// or infinite integers; throws DomainError when a > b or a finite endpoint
/// is not an integer.
SumFtc sum_ftc(const Polynomial& g, const GossamerNumber& a, const GossamerNumber& b);

/// Half-open convention G(b) - G(a) = sum_{k=a+1}^{b} g(k).
GossamerNumber sum_ftc_half_open(const Polynomial& g, const GossamerNumber& a, const GossamerNumber& b);

struct SumIntegralBridge {
  StepFunction step;  // height g(k) on the unit cell at k
  Rational integral;  // area of step over [a, b+1]
  bool equal = false;
};

/// sum_{k=a}^{b} g(k) as the area of a step function over [a, b+1].
SumIntegralBridge sum_to_integral_bridge(const Polynomial& g, std::int64_t a, std::int64_t b);

}  // namespace gossamer
