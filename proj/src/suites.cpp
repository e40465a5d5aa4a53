#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gossamer/discrete_sum.hpp"
#include "gossamer/errors.hpp"
#include "gossamer/poly_calculus.hpp"
#include "gossamer/random.hpp"
#include "gossamer/report.hpp"
#include "gossamer/riemann.hpp"
#include "gossamer/step_smoothing.hpp"

namespace gossamer {

namespace {

constexpr std::array<std::string_view, 6> kSuiteNames{"gossamer-axioms", "riemann", "ftc", "sum-ftc", "smoothing", "all"};

// Collects the names of failed properties for one case.
class Checks {
 public:
  void expect(bool ok, std::string what) {
    if (!ok) failures_.push_back(std::move(what));
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (failures_.empty()) return "holds";
    std::string out = "violated:";
    for (const auto& f : failures_) out += " " + f + ";";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

std::string case_id(std::string_view suite, std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", index);
  return std::string(suite) + "/" + buf;
}

CaseResult make_case(std::string_view suite, std::size_t index, std::string inputs, std::string expected,
                     const Checks& checks) {
  return {case_id(suite, index), std::move(inputs), std::move(expected), checks.summary(), checks.ok()};
}

bool leading_exponent_below(const GossamerNumber& x, const Rational& bound) {
  return x.is_zero() || *x.leading_exponent() < bound;
}

CaseResult axioms_case(RandomSource& rng, std::size_t index) {
  const GossamerNumber a = rng.gossamer();
  const GossamerNumber b = rng.gossamer();
  const GossamerNumber c = rng.gossamer();
  const GossamerNumber zero;
  const GossamerNumber one(1);
  Checks k;
  k.expect(a + b == b + a, "add commutes");
  k.expect(a * b == b * a, "mul commutes");
  k.expect((a + b) + c == a + (b + c), "add associates");
  k.expect((a * b) * c == a * (b * c), "mul associates");
  k.expect(a * (b + c) == a * b + a * c, "distributes");
  k.expect(a + (-a) == zero, "additive inverse");
  k.expect(a + zero == a && a * one == a, "identities");
  if (!a.is_zero()) {
    // The inverse is exact down to the floor; the product error sits below
    // floor + leading exponent of a.
    const Rational bound = a.truncation_floor() + max(Rational(0), *a.leading_exponent());
    k.expect(leading_exponent_below(a * inverse(a) - one, bound), "multiplicative inverse up to floor");
  }
  if (a < b) k.expect(a + c < b + c, "order compatible with addition");
  if (a > zero && b > zero) k.expect(a * b > zero, "positive times positive");
  if (a.classify() != Magnitude::infinite && b.classify() != Magnitude::infinite) {
    k.expect(standard_part(a + b) == standard_part(a) + standard_part(b), "st additive");
    k.expect(standard_part(a * b) == standard_part(a) * standard_part(b), "st multiplicative");
  }
  if (!a.is_zero() && !b.is_zero()) {
    const int relations = static_cast<int>(much_less(a, b)) + static_cast<int>(much_less(b, a)) +
                          static_cast<int>(*a.leading_exponent() == *b.leading_exponent());
    k.expect(relations == 1, "magnitude trichotomy");
    if (asymptotic_sim(a, b)) {
      const GossamerNumber d = b - a;
      k.expect(d.is_zero() || (much_less(d, a) && much_less(d, b)), "asymptotic decomposition");
    }
  }
  const Rational qa = rng.rational();
  const Rational qb = rng.rational();
  k.expect(GossamerNumber(qa) + GossamerNumber(qb) == GossamerNumber(qa + qb) &&
               GossamerNumber(qa) * GossamerNumber(qb) == GossamerNumber(qa * qb),
           "Q embeds");
  const GossamerNumber h = rng.coin() ? GossamerNumber::omega(-1) : GossamerNumber::omega(-3);
  std::vector<Rational> coeffs;
  for (int i = 0, n = static_cast<int>(rng.integer(1, 8)); i < n; ++i) coeffs.push_back(rng.rational());
  const Magnitude m = bounded_series_sum(coeffs, h, coeffs.size()).classify();
  k.expect(m == Magnitude::zero || m == Magnitude::infinitesimal, "bounded series in Phi");
  return make_case("gossamer-axioms", index, "a = " + a.str() + "; b = " + b.str() + "; c = " + c.str(),
                   "field, order and magnitude axioms hold", k);
}

CaseResult riemann_case(RandomSource& rng, std::size_t index) {
  const Polynomial f = rng.polynomial(10);
  const Polynomial g = rng.polynomial(10);
  const Rational alpha = rng.rational();
  const auto p = static_cast<unsigned>(rng.integer(0, 10));
  const std::int64_t n = rng.integer(1, 200);
  Checks k;
  const Rational integral = definite_integral(f, Rational(0), Rational(1));
  const UniformRiemannSum sum = uniform_riemann_sum(f);
  k.expect(sum.value.standard_part() == integral, "st(sum) = integral_0^1 f");
  k.expect(uniform_riemann_sum(f, GossamerNumber::omega(2)).value.standard_part() == integral,
           "partition width freedom (nu = w^2)");
  Rational brute_sum(0);
  for (std::int64_t j = 1; j <= n; ++j) brute_sum += Rational(j).pow(p);
  k.expect(eval(faulhaber(p), Rational(n)) == brute_sum, "faulhaber matches brute force");
  k.expect(uniform_riemann_sum(f * alpha + g).value == GossamerNumber(alpha) * sum.value + uniform_riemann_sum(g).value,
           "sum linear in f");
  if (!sum.value.is_zero() && !integral.is_zero()) {
    const RiemannRemainder r = riemann_remainder(f);
    k.expect(r.valid, "remainder negligible");
    k.expect(leading_exponent_below(r.c, Rational(0)), "remainder first order in 1/nu");
  }
  const PipelineTrace trace = definite_to_sum_pipeline(f);
  k.expect(trace.stages_equal, "pipeline stages 1-3 equal");
  k.expect(trace.recovered == integral, "pipeline reverses");
  k.expect(trace.remainder_negligible, "pipeline remainder negligible");
  return make_case("riemann", index, "f = " + f.str() + "; g = " + g.str() + "; p = " + std::to_string(p) +
                                         "; n = " + std::to_string(n),
                   "st(sum) = " + integral.str(), k);
}

CaseResult ftc_case(RandomSource& rng, std::size_t index) {
  const Polynomial P = rng.polynomial(8);
  const Polynomial q = rng.polynomial(8);
  Rational a = rng.rational();
  Rational b = rng.rational();
  if (b < a) std::swap(a, b);
  if (a == b) b += Rational(1);
  const Rational c = rng.rational();
  Rational alpha = rng.rational();
  if (alpha.is_zero()) alpha = Rational(1, 3);
  const Rational x = rng.rational();
  const GossamerNumber h = GossamerNumber::omega(-1);
  Checks k;
  k.expect(definite_integral(derivative(P), a, b) == eval(P, b) - eval(P, a), "FTC");
  k.expect(ftc_inverse_check(P, a, x, h).equal, "FTC inverse");
  k.expect(scale_integral_identity(P, a, b, alpha).equal, "scaling");
  k.expect(shift_integral_identity(P, a, b, c).equal, "shifting");
  k.expect(definite_integral(P * alpha + q, a, b) == alpha * definite_integral(P, a, b) + definite_integral(q, a, b),
           "linearity");
  k.expect(definite_integral(P, a, b) + definite_integral(P, b, c) == definite_integral(P, a, c), "range additivity");
  k.expect(derivative(antiderivative(q)) == q, "derivative of antiderivative");
  return make_case("ftc", index,
                   "P = " + P.str() + "; a = " + a.str() + "; b = " + b.str() + "; x = " + x.str() +
                       "; alpha = " + alpha.str() + "; c = " + c.str(),
                   "integral_a^b P' = " + (eval(P, b) - eval(P, a)).str(), k);
}

CaseResult sum_ftc_case(RandomSource& rng, std::size_t index) {
  const Polynomial g = rng.polynomial(6);
  std::int64_t a = rng.integer(0, 100);
  std::int64_t b = rng.integer(0, 100);
  if (b < a) std::swap(a, b);
  const std::int64_t c = rng.integer(b, 120);
  const std::int64_t n = rng.integer(1, 100);
  Checks k;
  const SumFtc s = sum_ftc(g, GossamerNumber(a), GossamerNumber(b));
  const Rational brute = sum_interval_bruteforce(g, a, b);
  k.expect(s.oracle_match && s.value == GossamerNumber(brute), "closed form matches brute force");
  const ClosedFormSum cf = indefinite_sum(g);
  k.expect(eval(cf.point_function, Rational(n)) - eval(cf.point_function, Rational(n - 1)) == eval(g, Rational(n)),
           "telescoping");
  k.expect(eval(cf.point_function, Rational(0)).is_zero(), "G(0) = 0");
  if (b < c) {
    k.expect(s.value + sum_ftc(g, GossamerNumber(b + 1), GossamerNumber(c)).value ==
                 sum_ftc(g, GossamerNumber(a), GossamerNumber(c)).value,
             "additivity");
  }
  k.expect(sum_to_integral_bridge(g, a, std::min<std::int64_t>(b, a + 20)).equal, "sum equals step area");
  return make_case("sum-ftc", index,
                   "g = " + g.str('k') + "; a = " + std::to_string(a) + "; b = " + std::to_string(b),
                   "sum = " + brute.str(), k);
}

CaseResult smoothing_case(RandomSource& rng, std::size_t index) {
  const StepFunction f = rng.step_function(20);
  constexpr std::array<BridgeShape, 3> shapes{BridgeShape::linear, BridgeShape::cubic_smoothstep,
                                              BridgeShape::quintic_smoothstep};
  const BridgeShape shape = shapes[static_cast<std::size_t>(rng.integer(0, 2))];
  constexpr std::array<long long, 3> eps_exponents{-1, -2, -5};
  const GossamerNumber eps = GossamerNumber::omega(eps_exponents[static_cast<std::size_t>(rng.integer(0, 2))]);
  const Rational lo(-60);
  const Rational hi(60);
  const SmoothedFunction f2 = smooth(f, shape, eps);
  Checks k;
  const AreaDelta d = area_delta(f, f2, lo, hi);
  k.expect(d.infinitesimal, "area preserved up to Phi");
  const DiscontinuityBudget budget = trapezoid_discontinuity_budget(f, eps);
  k.expect(budget.infinitesimal, "trapezoid budget in Phi");
  const Rational scale = rng.rational(9, 4).abs() + Rational(1);
  k.expect(trapezoid_discontinuity_budget(f, GossamerNumber(scale) * eps).total == GossamerNumber(scale) * budget.total,
           "budget linear in eps");
  k.expect(transfer_to_real(f2) == f, "round trip");
  k.expect(standard_part(smoothed_area(f2, lo, hi)) == area(transfer_to_real(f2), lo, hi), "transfer commutes with area");
  const Polynomial s = bridge_polynomial(shape);
  const auto y = f.levels();
  for (std::size_t j = 0; j < f.jump_count(); ++j) {
    const Polynomial bj = f2.bridge(j);
    k.expect(eval(bj, Rational(0)) == y[j] && eval(bj, Rational(1)) == y[j + 1], "bridge continuity");
  }
  const Polynomial d1 = derivative(s);
  const Polynomial d2 = derivative(d1);
  const unsigned order = continuity_order(shape);
  if (order >= 1) k.expect(eval(d1, Rational(0)).is_zero() && eval(d1, Rational(1)).is_zero(), "C1 at joins");
  if (order >= 2) k.expect(eval(d2, Rational(0)).is_zero() && eval(d2, Rational(1)).is_zero(), "C2 at joins");
  if (order == 0) k.expect(!eval(d1, Rational(0)).is_zero(), "linear bridge has a corner");
  return make_case("smoothing", index,
                   "f = " + f.to_json() + "; shape = " + to_string(shape) + "; eps = " + eps.str(),
                   "area delta in Phi, round trip exact", k);
}

using CaseFn = CaseResult (*)(RandomSource&, std::size_t);

CaseFn suite_function(std::string_view name) {
  if (name == "gossamer-axioms") return axioms_case;
  if (name == "riemann") return riemann_case;
  if (name == "ftc") return ftc_case;
  if (name == "sum-ftc") return sum_ftc_case;
  if (name == "smoothing") return smoothing_case;
  return nullptr;
}

void run_into(std::string_view name, std::uint64_t seed, std::size_t cases, std::vector<CaseResult>& out) {
  const CaseFn fn = suite_function(name);
  RandomSource rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    try {
      out.push_back(fn(rng, i));
    } catch (const Error& e) {
      out.push_back({case_id(name, i), "", "no error", std::string("error: ") + e.what(), false});
    }
  }
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuiteNames; }

VerificationReport run_suite(std::string_view name, std::uint64_t seed, std::size_t cases) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = std::string(name);
  if (name == "all") {
    for (const auto suite : kSuiteNames) {
      if (suite != "all") run_into(suite, seed, cases, report.cases);
    }
  } else if (suite_function(name) != nullptr) {
    run_into(name, seed, cases, report.cases);
  } else {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  report.finalize();
  report.summary.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gossamer
