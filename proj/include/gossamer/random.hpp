#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "gossamer/gossamer_number.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/rational.hpp"
#include "gossamer/step_smoothing.hpp"

namespace gossamer {

/// Deterministic generator of random exact values. Only raw mt19937_64 output
/// is used, so a given seed yields the same stream on every standard library.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }

  /// numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rational rational(std::int64_t num_bound = 20, std::int64_t den_bound = 9);
  /// Rational in [lo, hi] on a grid of spacing 1/den_bound-ish.
  Rational rational_between(const Rational& lo, const Rational& hi, std::int64_t resolution = 64);

  Polynomial polynomial(std::size_t max_degree, std::int64_t num_bound = 20, std::int64_t den_bound = 9);

  /// Up to max_terms terms with integer exponents in [-exp_bound, exp_bound]
  /// (occasionally a half-integer). Small exponents keep products of three
  /// values well above the default truncation floor.
  GossamerNumber gossamer(std::size_t max_terms = 3, std::int64_t exp_bound = 3);

  /// At most max_jumps breakpoints in [-50, 50], levels in [-level_bound, level_bound].
  StepFunction step_function(std::size_t max_jumps, std::int64_t level_bound = 100);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gossamer
