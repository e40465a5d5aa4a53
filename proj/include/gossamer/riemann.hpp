#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gossamer/gossamer_number.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/rational.hpp"

namespace gossamer {

/// Bernoulli number B_m with B_1 = +1/2, the convention matching sums that
/// include their upper endpoint.
Rational bernoulli_number(unsigned m);

/// S_p(n) = sum_{k=1}^{n} k^p as a polynomial in n (degree p + 1, no constant term).
Polynomial faulhaber(unsigned p);

/// sum_{j=1}^{nu} f(j/nu) (1/nu), evaluated in closed form at an infinite nu.
struct UniformRiemannSum {
  Polynomial integrand;
  GossamerNumber partition_count;
  GossamerNumber value;
};

/// Throws DomainError unless nu is positive and infinite.
UniformRiemannSum uniform_riemann_sum(const Polynomial& f, const GossamerNumber& nu = GossamerNumber::omega());

/// Standard part of the uniform sum at nu = w; equals integral_0^1 f.
Rational riemann_limit(const Polynomial& f);

struct RiemannRemainder {
  GossamerNumber c;  // sum value minus integral_0^1 f
  bool valid = false;
};

/// Splits the uniform sum at w into integral_0^1 f + c and checks that c is
/// zero or infinitely smaller than both. Throws ZeroMagnitude when either
/// side is zero.
RiemannRemainder riemann_remainder(const Polynomial& f);

/// Global uniform integrability: integral_0^nu f(x/nu) dx ~ sum_{j=1}^{nu} f(j/nu).
bool integrability_check(const Polynomial& f, const GossamerNumber& nu = GossamerNumber::omega());

/// Per-panel condition integral_j^{j+1} f(x/nu) dx ~ f(j/nu) sampled at one index.
struct PanelSample {
  std::string index;  // "1", "nu/2", "nu-1"
  GossamerNumber panel_integral;
  GossamerNumber sample;
  std::optional<bool> asymptotic;  // empty when a side is zero
};

std::vector<PanelSample> panel_samples(const Polynomial& f, const GossamerNumber& nu = GossamerNumber::omega());

struct PipelineStage {
  std::string stage;
  std::string expression;
  GossamerNumber value;
};

/// Definite integral on [0,1] carried to the uniform Riemann sum through the
/// improper scaled forms. The first three stages agree exactly; the fourth
/// differs by a remainder that is zero or negligible against stage three.
struct PipelineTrace {
  std::vector<PipelineStage> stages;
  GossamerNumber remainder;
  bool stages_equal = false;
  bool remainder_negligible = false;
  /// standard part of the sum stage, i.e. the trip back to the integral.
  Rational recovered;
};

PipelineTrace definite_to_sum_pipeline(const Polynomial& f, const GossamerNumber& nu = GossamerNumber::omega());

struct DivergentIntegral {
  GossamerNumber value;   // n^{p+1} * st(uniform sum of x^p)
  GossamerNumber scaled;  // n^{p+1} * integral_{1/n}^{1} x^p dx
  GossamerNumber exact;   // integral_1^n x^p dx
  bool asymptotic = false;
};

/// Integrates x^p over [1, n] at infinite n by scaling onto [0,1] and summing.
DivergentIntegral divergent_integral_via_sum(unsigned p, const GossamerNumber& n = GossamerNumber::omega());

struct ConjectureProbe {
  std::size_t refinement = 0;
  double uniform_value = 0.0;
  double tagged_value = 0.0;
  double gap = 0.0;
};

/// Floating-point comparison of the uniform n-panel right-endpoint sum with a
/// tagged sum over the given breakpoints, each cell refined n-fold. Purely
/// empirical. Breakpoints must be strictly increasing within [0,1].
ConjectureProbe conjecture_probe(const std::function<double(double)>& f, std::span<const Rational> partition,
                                 std::size_t n);
ConjectureProbe conjecture_probe(const Polynomial& f, std::span<const Rational> partition, std::size_t n);

/// The probe at each refinement count; runs the refinements concurrently.
std::vector<ConjectureProbe> conjecture_sweep(const std::function<double(double)>& f,
                                              std::span<const Rational> partition,
                                              std::span<const std::size_t> refinements);

/// Breakpoints 2^-k for k = levels..1, a non-uniform dyadic partition of (0,1).
std::vector<Rational> dyadic_partition(unsigned levels);
/// Breakpoints ratio^k for k = levels..1 (0 < ratio < 1).
std::vector<Rational> geometric_partition(const Rational& ratio, unsigned levels);

}  // namespace gossamer
