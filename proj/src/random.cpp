#include "gossamer/random.hpp"

#include <set>
#include <vector>

namespace gossamer {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RandomSource::rational(std::int64_t num_bound, std::int64_t den_bound) {
  const std::int64_t num = integer(-num_bound, num_bound);
  const std::int64_t den = integer(1, den_bound);
  return Rational(num, den);
}

Rational RandomSource::rational_between(const Rational& lo, const Rational& hi, std::int64_t resolution) {
  return lo + (hi - lo) * Rational(integer(0, resolution), resolution);
}

Polynomial RandomSource::polynomial(std::size_t max_degree, std::int64_t num_bound, std::int64_t den_bound) {
  const auto degree = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_degree)));
  std::vector<Rational> coeffs(degree + 1);
  for (auto& c : coeffs) c = rational(num_bound, den_bound);
  return Polynomial(std::move(coeffs));
}

GossamerNumber RandomSource::gossamer(std::size_t max_terms, std::int64_t exp_bound) {
  const auto count = integer(0, static_cast<std::int64_t>(max_terms));
  std::vector<Term> terms;
  for (std::int64_t i = 0; i < count; ++i) {
    Rational e(integer(-exp_bound, exp_bound));
    if (integer(0, 7) == 0) e += Rational(1, 2);
    Rational c = rational();
    if (c.is_zero()) c = Rational(1);
    terms.push_back({e, c});
  }
  return GossamerNumber::from_terms(std::move(terms), default_truncation_floor());
}

StepFunction RandomSource::step_function(std::size_t max_jumps, std::int64_t level_bound) {
  const auto jumps = integer(0, static_cast<std::int64_t>(max_jumps));
  std::set<Rational> qs;
  while (static_cast<std::int64_t>(qs.size()) < jumps) qs.insert(rational_between(Rational(-50), Rational(50), 400));
  std::vector<Rational> levels;
  for (std::int64_t i = 0; i <= jumps; ++i) levels.push_back(rational(level_bound, 4));
  return StepFunction(std::vector<Rational>(qs.begin(), qs.end()), std::move(levels));
}

}  // namespace gossamer
