#include "gossamer/step_smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "gossamer/errors.hpp"
#include "gossamer/poly_calculus.hpp"

namespace gossamer {

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Rational> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
  if (levels_.size() != breakpoints_.size() + 1) {
    throw DomainError("StepFunction: need exactly one more level than breakpoints (got " +
                      std::to_string(levels_.size()) + " levels, " + std::to_string(breakpoints_.size()) +
                      " breakpoints)");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("StepFunction: breakpoints must increase strictly");
  }
}

StepFunction StepFunction::constant(const Rational& level) { return StepFunction({}, {level}); }

StepFunction StepFunction::from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(text), e.byte, "valid JSON");
  }
  auto read_list = [&](const char* key) {
    std::vector<Rational> out;
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
      throw ParseError(std::string(text), 0, std::string("array field \"") + key + "\"");
    }
    for (const auto& item : doc[key]) {
      if (item.is_string()) {
        out.push_back(Rational::parse(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        out.push_back(Rational(item.get<long long>()));
      } else {
        throw ParseError(std::string(text), 0, std::string("rational strings in \"") + key + "\"");
      }
    }
    return out;
  };
  return StepFunction(read_list("breakpoints"), read_list("levels"));
}

std::string StepFunction::to_json() const {
  nlohmann::json doc;
  doc["breakpoints"] = nlohmann::json::array();
  doc["levels"] = nlohmann::json::array();
  for (const auto& q : breakpoints_) doc["breakpoints"].push_back(q.str());
  for (const auto& y : levels_) doc["levels"].push_back(y.str());
  return doc.dump();
}

Rational StepFunction::operator()(const Rational& x) const {
  std::size_t i = 0;
  while (i < breakpoints_.size() && breakpoints_[i] < x) ++i;
  return levels_[i];
}

StepFunction iverson_step(const Rational& q) { return StepFunction({q}, {Rational(0), Rational(1)}); }

StepFunction step_sum(std::span<const std::pair<Rational, Rational>> steps) {
  std::map<Rational, Rational> weights;
  for (const auto& [q, w] : steps) weights[q] += w;
  std::vector<Rational> breakpoints;
  std::vector<Rational> levels{Rational(0)};
  for (const auto& [q, w] : weights) {
    if (w.is_zero()) continue;
    breakpoints.push_back(q);
    levels.push_back(levels.back() + w);
  }
  return StepFunction(std::move(breakpoints), std::move(levels));
}

Rational area(const StepFunction& f, const Rational& a, const Rational& b) {
  if (a > b) throw DomainError("area: lower bound exceeds upper bound");
  const auto q = f.breakpoints();
  const auto y = f.levels();
  Rational total(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Rational lo = i == 0 ? a : max(a, q[i - 1]);
    const Rational hi = i == q.size() ? b : min(b, q[i]);
    if (lo < hi) total += y[i] * (hi - lo);
  }
  return total;
}

std::string to_string(BridgeShape shape) {
  switch (shape) {
    case BridgeShape::linear:
      return "linear";
    case BridgeShape::cubic_smoothstep:
      return "cubic";
    case BridgeShape::quintic_smoothstep:
      return "quintic";
  }
  return "unknown";
}

std::optional<BridgeShape> parse_bridge_shape(std::string_view name) {
  if (name == "linear") return BridgeShape::linear;
  if (name == "cubic" || name == "cubic_smoothstep") return BridgeShape::cubic_smoothstep;
  if (name == "quintic" || name == "quintic_smoothstep") return BridgeShape::quintic_smoothstep;
  return std::nullopt;
}

Polynomial bridge_polynomial(BridgeShape shape) {
  switch (shape) {
    case BridgeShape::linear:
      return Polynomial({0, 1});
    case BridgeShape::cubic_smoothstep:
      return Polynomial({0, 0, 3, -2});
    case BridgeShape::quintic_smoothstep:
      return Polynomial({0, 0, 0, 10, -15, 6});
  }
  return {};
}

unsigned continuity_order(BridgeShape shape) {
  switch (shape) {
    case BridgeShape::linear:
      return 0;
    case BridgeShape::cubic_smoothstep:
      return 1;
    case BridgeShape::quintic_smoothstep:
      return 2;
  }
  return 0;
}

SmoothedFunction::SmoothedFunction(StepFunction base, BridgeShape shape, GossamerNumber halfwidth)
    : base_(std::move(base)), shape_(shape), halfwidth_(std::move(halfwidth)) {
  if (halfwidth_.classify() != Magnitude::infinitesimal || halfwidth_.sign() <= 0) {
    throw DomainError("smooth: halfwidth " + halfwidth_.str() + " is not a positive infinitesimal");
  }
  const auto q = base_.breakpoints();
  const auto y = base_.levels();
  std::optional<GossamerNumber> left;
  for (std::size_t k = 0; k < q.size(); ++k) {
    GossamerNumber lo = GossamerNumber(q[k]) - halfwidth_;
    GossamerNumber hi = GossamerNumber(q[k]) + halfwidth_;
    pieces_.push_back({Piece::Kind::constant, left, lo, y[k], y[k]});
    pieces_.push_back({Piece::Kind::bridge, lo, hi, y[k], y[k + 1]});
    left = hi;
  }
  pieces_.push_back({Piece::Kind::constant, left, std::nullopt, y.back(), y.back()});
}

Polynomial SmoothedFunction::bridge(std::size_t k) const {
  const auto y = base_.levels();
  if (k + 1 >= y.size()) throw DomainError("bridge index out of range");
  return Polynomial::constant(y[k]) + bridge_polynomial(shape_) * (y[k + 1] - y[k]);
}

GossamerNumber SmoothedFunction::operator()(const GossamerNumber& x) const {
  for (const auto& piece : pieces_) {
    if (piece.right && x > *piece.right) continue;
    if (piece.kind == Piece::Kind::constant) return GossamerNumber(piece.from);
    const GossamerNumber t = (x - *piece.left) / (GossamerNumber(2) * halfwidth_);
    return GossamerNumber(piece.from) + GossamerNumber(piece.to - piece.from) * eval(bridge_polynomial(shape_), t);
  }
  return GossamerNumber(pieces_.back().from);
}

double SmoothedFunction::sample(double x, double eps_standin) const {
  const auto q = base_.breakpoints();
  const auto y = base_.levels();
  const Polynomial s = bridge_polynomial(shape_);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double qk = q[k].to_double();
    if (x <= qk - eps_standin) return y[k].to_double();
    if (x <= qk + eps_standin) {
      const double t = (x - qk + eps_standin) / (2.0 * eps_standin);
      double st = 0.0;
      const auto c = s.coefficients();
      for (std::size_t i = c.size(); i-- > 0;) st = st * t + c[i].to_double();
      return y[k].to_double() + (y[k + 1] - y[k]).to_double() * st;
    }
  }
  return y.back().to_double();
}

SmoothedFunction smooth(const StepFunction& f, BridgeShape shape, const GossamerNumber& eps) {
  return SmoothedFunction(f, shape, eps);
}

GossamerNumber smoothed_area(const SmoothedFunction& f2, const Rational& a, const Rational& b) {
  if (a > b) throw DomainError("smoothed_area: lower bound exceeds upper bound");
  for (const auto& q : f2.base().breakpoints()) {
    if (q == a || q == b) throw DomainError("smoothed_area: bridge at " + q.str() + " crosses the integration boundary");
  }
  const GossamerNumber ga(a);
  const GossamerNumber gb(b);
  const GossamerNumber width = GossamerNumber(2) * f2.halfwidth();
  GossamerNumber total = GossamerNumber::from_terms({}, f2.halfwidth().truncation_floor());
  std::size_t bridge_index = 0;
  for (const auto& piece : f2.pieces()) {
    const GossamerNumber lo = piece.left ? std::max(*piece.left, ga) : ga;
    const GossamerNumber hi = piece.right ? std::min(*piece.right, gb) : gb;
    const bool inside = lo < hi;
    if (piece.kind == Piece::Kind::constant) {
      if (inside) total += GossamerNumber(piece.from) * (hi - lo);
      continue;
    }
    // Bridges are either wholly inside (a, b) or wholly outside it.
    if (inside) total += width * GossamerNumber(definite_integral(f2.bridge(bridge_index), Rational(0), Rational(1)));
    ++bridge_index;
  }
  return total;
}

AreaDelta area_delta(const StepFunction& f, const SmoothedFunction& f2, const Rational& a, const Rational& b) {
  const GossamerNumber delta = smoothed_area(f2, a, b) - GossamerNumber(area(f, a, b));
  const Magnitude m = delta.classify();
  return {delta, m == Magnitude::zero || m == Magnitude::infinitesimal};
}

DiscontinuityBudget trapezoid_discontinuity_budget(const StepFunction& f, const GossamerNumber& eps) {
  if (eps.classify() != Magnitude::infinitesimal || eps.sign() <= 0) {
    throw DomainError("trapezoid_discontinuity_budget: eps " + eps.str() + " is not a positive infinitesimal");
  }
  const auto y = f.levels();
  DiscontinuityBudget out;
  out.total = GossamerNumber::from_terms({}, eps.truncation_floor());
  for (std::size_t k = 0; k + 1 < y.size(); ++k) {
    const Rational rise = (y[k + 1] - y[k]).abs();
    const Rational floor_level = min(y[k + 1], y[k]);
    GossamerNumber a_k = GossamerNumber(rise) * eps + GossamerNumber(floor_level * Rational(2)) * eps;
    out.total += a_k;
    out.per_bridge.push_back(std::move(a_k));
  }
  const Magnitude m = out.total.classify();
  out.infinitesimal = m == Magnitude::zero || m == Magnitude::infinitesimal;
  return out;
}

StepFunction transfer_to_real(const SmoothedFunction& f2) {
  std::vector<Rational> breakpoints;
  std::vector<Rational> levels;
  for (const auto& piece : f2.pieces()) {
    if (piece.kind == Piece::Kind::constant) {
      levels.push_back(piece.from);
    } else {
      // Both ends of a bridge share the standard part q.
      breakpoints.push_back(piece.left->standard_part());
    }
  }
  return StepFunction(std::move(breakpoints), std::move(levels));
}

double logistic_sample(const StepFunction& f, double x, double eps_standin) {
  constexpr double kSteepness = 8.0;
  const auto q = f.breakpoints();
  const auto y = f.levels();
  double value = y.front().to_double();
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double s = 1.0 / (1.0 + std::exp(-kSteepness * (x - q[k].to_double()) / eps_standin));
    value += (y[k + 1] - y[k]).to_double() * s;
  }
  return value;
}

}  // namespace gossamer
