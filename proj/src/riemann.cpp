#include "gossamer/riemann.hpp"

#include <cmath>
#include <future>
#include <type_traits>
#include <utility>

#include "gossamer/errors.hpp"
#include "gossamer/poly_calculus.hpp"

namespace gossamer {

namespace {

void require_positive_infinite(const GossamerNumber& nu, const char* where) {
  if (nu.classify() != Magnitude::infinite || nu.sign() <= 0) {
    throw DomainError(std::string(where) + ": nu = " + nu.str() + " is not a positive infinite number");
  }
}

// Bernoulli numbers B_0..B_m with B_1 = -1/2, from sum_{k=0}^{j} C(j+1,k) B_k = 0.
std::vector<Rational> bernoulli_minus_table(unsigned m) {
  std::vector<Rational> b(m + 1);
  b[0] = Rational(1);
  for (unsigned j = 1; j <= m; ++j) {
    Rational acc(0);
    for (unsigned k = 0; k < j; ++k) acc += binomial(j + 1, k) * b[k];
    b[j] = -acc / Rational(static_cast<long long>(j) + 1);
  }
  return b;
}

// nu^k for any integer k, formed directly so that no intermediate power
// falls below the truncation floor before being multiplied back up.
GossamerNumber nu_power(const GossamerNumber& nu, const GossamerNumber& inv_nu, long long k) {
  return k >= 0 ? nu.pow(static_cast<unsigned>(k)) : inv_nu.pow(static_cast<unsigned>(-k));
}

// integral_0^nu f(x/nu) dx, expanded monomial-wise:
// a_p * nu^-p * nu^{p+1}/(p+1), with the powers of nu collected first.
GossamerNumber scaled_improper_integral(const Polynomial& f, const GossamerNumber& nu) {
  const GossamerNumber inv_nu = inverse(nu);
  GossamerNumber total = GossamerNumber::from_terms({}, nu.truncation_floor());
  const auto coeffs = f.coefficients();
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (coeffs[p].is_zero()) continue;
    const auto sp = static_cast<long long>(p);
    total += GossamerNumber(coeffs[p] / Rational(sp + 1)) * nu_power(nu, inv_nu, (sp + 1) - sp);
  }
  return total;
}

// sum_{j=1}^{nu} f(j/nu) * nu^shift through Faulhaber:
// a_p nu^-p S_p(nu) nu^shift = sum_j a_p s_{p,j} nu^{j - p + shift}.
GossamerNumber faulhaber_uniform_sum(const Polynomial& f, const GossamerNumber& nu, long long shift) {
  const GossamerNumber inv_nu = inverse(nu);
  GossamerNumber total = GossamerNumber::from_terms({}, nu.truncation_floor());
  const auto coeffs = f.coefficients();
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (coeffs[p].is_zero()) continue;
    const Polynomial sp = faulhaber(static_cast<unsigned>(p));
    const auto s = sp.coefficients();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j].is_zero()) continue;
      const long long k = static_cast<long long>(j) - static_cast<long long>(p) + shift;
      total += GossamerNumber(coeffs[p] * s[j]) * nu_power(nu, inv_nu, k);
    }
  }
  return total;
}

std::vector<Rational> probe_points(std::span<const Rational> partition) {
  const Rational zero(0);
  const Rational one(1);
  std::vector<Rational> points{zero};
  for (const auto& q : partition) {
    if (q < zero || q > one) throw DomainError("conjecture_probe: breakpoint " + q.str() + " outside [0,1]");
    if (q <= points.back() && !(q == zero && points.size() == 1)) {
      throw DomainError("conjecture_probe: breakpoints must be strictly increasing");
    }
    if (q != points.back()) points.push_back(q);
  }
  if (points.back() != one) points.push_back(one);
  return points;
}

template <typename Value, typename Eval>
ConjectureProbe run_probe(Eval&& f, std::span<const Rational> partition, std::size_t n) {
  if (n == 0) throw DomainError("conjecture_probe: refinement must be at least 1");
  const std::vector<Rational> points = probe_points(partition);
  const auto count = static_cast<long long>(n);

  auto to_value = [](const Rational& r) {
    if constexpr (std::is_same_v<Value, Rational>) {
      return r;
    } else {
      return r.to_double();
    }
  };

  Value uniform{};
  for (long long j = 1; j <= count; ++j) uniform += f(to_value(Rational(j, count)));
  uniform = uniform * to_value(Rational(1, count));

  Value tagged{};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Rational width = (points[i + 1] - points[i]) / Rational(count);
    Value cell{};
    for (long long j = 1; j <= count; ++j) cell += f(to_value(points[i] + width * Rational(j)));
    tagged += cell * to_value(width);
  }

  ConjectureProbe out;
  out.refinement = n;
  if constexpr (std::is_same_v<Value, Rational>) {
    out.uniform_value = uniform.to_double();
    out.tagged_value = tagged.to_double();
    out.gap = (uniform - tagged).abs().to_double();
  } else {
    out.uniform_value = uniform;
    out.tagged_value = tagged;
    out.gap = std::fabs(uniform - tagged);
  }
  return out;
}

}  // namespace

Rational bernoulli_number(unsigned m) {
  if (m == 1) return Rational(1, 2);
  return bernoulli_minus_table(m).back();
}

Polynomial faulhaber(unsigned p) {
  // S_p(n) = 1/(p+1) sum_{j=0}^{p} C(p+1, j) B+_j n^{p+1-j}
  std::vector<Rational> b = bernoulli_minus_table(p);
  if (p >= 1) b[1] = Rational(1, 2);
  std::vector<Rational> coeffs(p + 2);
  const Rational scale = Rational(1, static_cast<long long>(p) + 1);
  for (unsigned j = 0; j <= p; ++j) coeffs[p + 1 - j] = scale * binomial(p + 1, j) * b[j];
  return Polynomial(std::move(coeffs));
}

UniformRiemannSum uniform_riemann_sum(const Polynomial& f, const GossamerNumber& nu) {
  require_positive_infinite(nu, "uniform_riemann_sum");
  return {f, nu, faulhaber_uniform_sum(f, nu, -1)};
}

Rational riemann_limit(const Polynomial& f) { return uniform_riemann_sum(f).value.standard_part(); }

RiemannRemainder riemann_remainder(const Polynomial& f) {
  const GossamerNumber sum = uniform_riemann_sum(f).value;
  const GossamerNumber integral(definite_integral(f, Rational(0), Rational(1)));
  if (sum.is_zero() || integral.is_zero()) throw ZeroMagnitude("riemann_remainder");
  const GossamerNumber c = sum - integral;
  const bool valid = c.is_zero() || (much_less(c, sum) && much_less(c, integral));
  return {c, valid};
}

bool integrability_check(const Polynomial& f, const GossamerNumber& nu) {
  require_positive_infinite(nu, "integrability_check");
  const GossamerNumber integral_side = scaled_improper_integral(f, nu);
  const GossamerNumber sum_side = faulhaber_uniform_sum(f, nu, 0);
  if (integral_side.is_zero() || sum_side.is_zero()) throw ZeroMagnitude("integrability_check");
  return asymptotic_sim(integral_side, sum_side);
}

std::vector<PanelSample> panel_samples(const Polynomial& f, const GossamerNumber& nu) {
  require_positive_infinite(nu, "panel_samples");
  const GossamerNumber inv_nu = inverse(nu);
  const Polynomial primitive = antiderivative(f);
  const GossamerNumber one(1);
  const std::vector<std::pair<std::string, GossamerNumber>> indices{
      {"1", one}, {"nu/2", nu * GossamerNumber(Rational(1, 2))}, {"nu-1", nu - one}};
  std::vector<PanelSample> out;
  for (const auto& [label, j] : indices) {
    // integral_j^{j+1} f(x/nu) dx = nu * (F((j+1)/nu) - F(j/nu))
    const GossamerNumber panel = nu * (eval(primitive, (j + one) * inv_nu) - eval(primitive, j * inv_nu));
    const GossamerNumber sample = eval(f, j * inv_nu);
    std::optional<bool> sim;
    if (!panel.is_zero() && !sample.is_zero()) sim = asymptotic_sim(panel, sample);
    out.push_back({label, panel, sample, sim});
  }
  return out;
}

PipelineTrace definite_to_sum_pipeline(const Polynomial& f, const GossamerNumber& nu) {
  require_positive_infinite(nu, "definite_to_sum_pipeline");
  const std::string body = "(" + f.str() + ")";
  const std::string scaled_body = "(" + f.str() + ")[x := x/nu]";
  const GossamerNumber inv_nu = inverse(nu);
  const Polynomial primitive = antiderivative(f);

  const GossamerNumber stage1(definite_integral(f, Rational(0), Rational(1)));
  // Antiderivative in u = x/nu, evaluated at the transformed endpoints.
  const GossamerNumber stage2 = eval(primitive, nu * inv_nu) - eval(primitive, GossamerNumber(0) * inv_nu);
  const GossamerNumber stage3 = scaled_improper_integral(f, nu) * inv_nu;
  const GossamerNumber stage4 = uniform_riemann_sum(f, nu).value;

  PipelineTrace trace;
  trace.stages = {
      {"definite", "integral_0^1 " + body + " dx", stage1},
      {"scaled_improper", "integral_0^nu " + scaled_body + " d(x/nu)", stage2},
      {"scaled_out", "integral_0^nu " + scaled_body + " (1/nu) dx", stage3},
      {"uniform_sum", "sum_{j=1}^{nu} " + body + "[x := j/nu] (1/nu)", stage4},
  };
  trace.stages_equal = stage1 == stage2 && stage2 == stage3;
  trace.remainder = stage4 - stage3;
  if (trace.remainder.is_zero()) {
    trace.remainder_negligible = true;
  } else if (stage3.is_zero()) {
    trace.remainder_negligible = trace.remainder.classify() == Magnitude::infinitesimal;
  } else {
    trace.remainder_negligible = much_less(trace.remainder, stage3);
  }
  trace.recovered = stage4.standard_part();
  return trace;
}

DivergentIntegral divergent_integral_via_sum(unsigned p, const GossamerNumber& n) {
  require_positive_infinite(n, "divergent_integral_via_sum");
  const Polynomial xp = Polynomial::monomial(p);
  const GossamerNumber scale = n.pow(p + 1);
  DivergentIntegral out;
  out.value = scale * GossamerNumber(riemann_limit(xp));
  out.scaled = scale * definite_integral(xp, inverse(n), GossamerNumber(1));
  out.exact = definite_integral(xp, GossamerNumber(1), n);
  out.asymptotic = asymptotic_sim(out.value, out.exact);
  return out;
}

ConjectureProbe conjecture_probe(const std::function<double(double)>& f, std::span<const Rational> partition,
                                 std::size_t n) {
  return run_probe<double>(f, partition, n);
}

ConjectureProbe conjecture_probe(const Polynomial& f, std::span<const Rational> partition, std::size_t n) {
  return run_probe<Rational>([&f](const Rational& x) { return eval(f, x); }, partition, n);
}

std::vector<ConjectureProbe> conjecture_sweep(const std::function<double(double)>& f,
                                              std::span<const Rational> partition,
                                              std::span<const std::size_t> refinements) {
  probe_points(partition);
  std::vector<std::future<ConjectureProbe>> pending;
  pending.reserve(refinements.size());
  for (const std::size_t n : refinements) {
    pending.push_back(std::async(std::launch::async, [&f, partition, n] { return conjecture_probe(f, partition, n); }));
  }
  std::vector<ConjectureProbe> out;
  out.reserve(pending.size());
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

std::vector<Rational> dyadic_partition(unsigned levels) {
  std::vector<Rational> out;
  for (unsigned k = levels; k >= 1; --k) out.push_back(Rational(1) / Rational(2).pow(k));
  return out;
}

std::vector<Rational> geometric_partition(const Rational& ratio, unsigned levels) {
  if (ratio <= Rational(0) || ratio >= Rational(1)) throw DomainError("geometric_partition: ratio must lie in (0,1)");
  std::vector<Rational> out;
  for (unsigned k = levels; k >= 1; --k) out.push_back(ratio.pow(k));
  return out;
}

}  // namespace gossamer
