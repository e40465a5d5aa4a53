#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gossamer/gossamer_number.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/rational.hpp"

namespace gossamer {

/**
 * Piecewise-constant function on the real line.
 *
 * With breakpoints q_1 < ... < q_w and levels y_0 ... y_w, level y_i holds on
 * (q_i, q_{i+1}], y_0 on (-inf, q_1] and y_w on (q_w, inf). The value at a
 * breakpoint is therefore the level to its left, matching the strict Iverson
 * bracket [x > q].
 */
class StepFunction {
 public:
  StepFunction() : levels_{Rational(0)} {}
  /// Throws DomainError unless breakpoints increase strictly and there is one
  /// more level than breakpoints.
  StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> levels);

  static StepFunction constant(const Rational& level);

  /// {"breakpoints": ["1/2", "3"], "levels": ["0", "1", "3"]}
  static StepFunction from_json(std::string_view text);
  std::string to_json() const;

  std::span<const Rational> breakpoints() const { return breakpoints_; }
  std::span<const Rational> levels() const { return levels_; }
  std::size_t jump_count() const { return breakpoints_.size(); }

  Rational operator()(const Rational& x) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> levels_;
};

/// Unit step [x > q].
StepFunction iverson_step(const Rational& q);

/// Superposition of weighted brackets weight * [x > q]; equal breakpoints merge
/// by summing their weights.
StepFunction step_sum(std::span<const std::pair<Rational, Rational>> steps);

/// Exact signed area of f over [a, b]. Throws DomainError when a > b.
Rational area(const StepFunction& f, const Rational& a, const Rational& b);

enum class BridgeShape { linear, cubic_smoothstep, quintic_smoothstep };

std::string to_string(BridgeShape shape);
std::optional<BridgeShape> parse_bridge_shape(std::string_view name);

/// Interpolant s(t) on [0,1] with s(0) = 0 and s(1) = 1:
/// t, 3t^2 - 2t^3, or 6t^5 - 15t^4 + 10t^3.
Polynomial bridge_polynomial(BridgeShape shape);

/// Highest derivative order matched with the constant neighbours (0, 1 or 2).
unsigned continuity_order(BridgeShape shape);

/// One piece of a smoothed function on the half-open interval (left, right].
/// Constant pieces at the ends are unbounded on one side.
struct Piece {
  enum class Kind { constant, bridge };
  Kind kind = Kind::constant;
  std::optional<GossamerNumber> left;   // empty: -inf
  std::optional<GossamerNumber> right;  // empty: +inf
  Rational from;  // level (constant) or start level (bridge)
  Rational to;    // equal to `from` for constant pieces
};

/**
 * Continuous representation of a step function: every jump at q is replaced
 * on (q - eps, q + eps] by an interpolant between the neighbouring levels,
 * with eps a positive infinitesimal.
 */
class SmoothedFunction {
 public:
  SmoothedFunction(StepFunction base, BridgeShape shape, GossamerNumber halfwidth);

  const StepFunction& base() const { return base_; }
  BridgeShape shape() const { return shape_; }
  const GossamerNumber& halfwidth() const { return halfwidth_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  GossamerNumber operator()(const GossamerNumber& x) const;

  /// Bridge k as a polynomial in the local coordinate t = (x - q_k + eps)/(2 eps).
  Polynomial bridge(std::size_t k) const;

  /// Floating-point sample with eps replaced by a finite stand-in width.
  double sample(double x, double eps_standin) const;

 private:
  StepFunction base_;
  BridgeShape shape_;
  GossamerNumber halfwidth_;
  std::vector<Piece> pieces_;
};

/// Throws DomainError unless eps is a positive infinitesimal.
SmoothedFunction smooth(const StepFunction& f, BridgeShape shape, const GossamerNumber& eps);

/// Exact integral of the smoothed function over [a, b]. Every bridge must lie
/// strictly inside or strictly outside (a, b); a bridge centred on a or b
/// throws DomainError.
GossamerNumber smoothed_area(const SmoothedFunction& f2, const Rational& a, const Rational& b);

struct AreaDelta {
  GossamerNumber delta;  // smoothed area minus step area
  bool infinitesimal = false;
};

AreaDelta area_delta(const StepFunction& f, const SmoothedFunction& f2, const Rational& a, const Rational& b);

/// Trapezoid area under each bridge, |y_{k+1} - y_k| eps + min(y_{k+1}, y_k) 2 eps.
struct DiscontinuityBudget {
  std::vector<GossamerNumber> per_bridge;
  GossamerNumber total;
  bool infinitesimal = false;
};

DiscontinuityBudget trapezoid_discontinuity_budget(const StepFunction& f, const GossamerNumber& eps);

/// Collapses each bridge to its centre (eps -> 0), recovering a step function.
StepFunction transfer_to_real(const SmoothedFunction& f2);

/// Smooth logistic bridge 1/(1 + exp(-k (x - q)/eps)) for plotting only; it has
/// no exact rational area. Steepness k = 8 puts the ends within 4e-4 of the levels.
double logistic_sample(const StepFunction& f, double x, double eps_standin);

}  // namespace gossamer
