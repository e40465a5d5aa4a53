#include <gtest/gtest.h>

#include "gossamer/discrete_sum.hpp"
#include "gossamer/errors.hpp"
#include "gossamer/random.hpp"
#include "gossamer/riemann.hpp"
#include "oracles.hpp"

using gossamer::GossamerNumber;
using gossamer::Polynomial;
using gossamer::Rational;

namespace {
Polynomial P(const char* text) { return Polynomial::parse(text); }
GossamerNumber G(const char* text) { return GossamerNumber::parse(text); }
const GossamerNumber w = GossamerNumber::omega();
}  // namespace

TEST(IndefiniteSum, Examples) {
  EXPECT_EQ(gossamer::indefinite_sum(P("k")).point_function, P("1/2*n^2 + 1/2*n"));
  EXPECT_TRUE(gossamer::indefinite_sum(Polynomial()).point_function.is_zero());
  EXPECT_EQ(gossamer::indefinite_sum(P("k^2")).point_function, P("1/3*n^3 + 1/2*n^2 + 1/6*n"));
  EXPECT_EQ(gossamer::indefinite_sum(P("k^2")).term, P("k^2"));
}

TEST(SumAtPoint, Examples) {
  const auto s = gossamer::indefinite_sum(P("k"));
  EXPECT_EQ(gossamer::sum_at_point(s, GossamerNumber(100)), GossamerNumber(5050));
  EXPECT_EQ(mpq_class(5050), oracle::interval_sum(oracle::coeffs(P("k")), 1, 100));
  EXPECT_TRUE(gossamer::sum_at_point(s, GossamerNumber(0)).is_zero());
  EXPECT_EQ(gossamer::sum_at_point(s, w), G("1/2*w^2 + 1/2*w"));
  EXPECT_EQ(gossamer::lower_sum_at_point(s, w), -G("1/2*w^2 + 1/2*w"));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(gossamer::sum_interval_bruteforce(P("k"), 3, 10), Rational(52));
  EXPECT_EQ(gossamer::sum_interval_bruteforce(P("k^2"), 1, 1), Rational(1));
  EXPECT_EQ(gossamer::sum_interval_bruteforce(P("1"), -2, 2), Rational(5));
  EXPECT_THROW((void)gossamer::sum_interval_bruteforce(P("k"), 5, 4), gossamer::DomainError);
}

TEST(SumFtc, Examples) {
  auto r = gossamer::sum_ftc(P("k"), GossamerNumber(3), GossamerNumber(10));
  EXPECT_EQ(r.value, GossamerNumber(52));
  EXPECT_TRUE(r.oracle_match);
  EXPECT_FALSE(r.negative_argument);

  r = gossamer::sum_ftc(P("k^2"), GossamerNumber(1), w);
  EXPECT_EQ(r.value, G("1/3*w^3 + 1/2*w^2 + 1/6*w"));
  EXPECT_TRUE(r.oracle_match);

  r = gossamer::sum_ftc(P("k"), GossamerNumber(1), w);
  EXPECT_EQ(r.value, G("1/2*w^2 + 1/2*w"));

  r = gossamer::sum_ftc(P("k^3"), GossamerNumber(-4), GossamerNumber(2));
  EXPECT_EQ(r.value, GossamerNumber(-91));
  EXPECT_TRUE(r.oracle_match);
  EXPECT_TRUE(r.negative_argument);

  EXPECT_THROW((void)gossamer::sum_ftc(P("k"), GossamerNumber(4), GossamerNumber(3)), gossamer::DomainError);
  EXPECT_THROW((void)gossamer::sum_ftc(P("k"), w, GossamerNumber(3)), gossamer::DomainError);
  EXPECT_THROW((void)gossamer::sum_ftc(P("k"), GossamerNumber(Rational(1, 2)), GossamerNumber(3)),
               gossamer::DomainError);
}

TEST(SumFtc, HalfOpenConvention) {
  EXPECT_EQ(gossamer::sum_ftc_half_open(P("k"), GossamerNumber(3), GossamerNumber(10)), GossamerNumber(49));
  EXPECT_EQ(gossamer::sum_ftc_half_open(P("k"), GossamerNumber(0), w), G("1/2*w^2 + 1/2*w"));
}

TEST(SumToIntegral, Examples) {
  auto b = gossamer::sum_to_integral_bridge(P("k"), 1, 3);
  EXPECT_EQ(b.integral, Rational(6));
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.step(Rational(3, 2)), Rational(1));
  EXPECT_EQ(b.step(Rational(5, 2)), Rational(2));
  EXPECT_EQ(b.step(Rational(7, 2)), Rational(3));

  b = gossamer::sum_to_integral_bridge(P("1"), 0, 0);
  EXPECT_EQ(b.integral, Rational(1));
  b = gossamer::sum_to_integral_bridge(P("k^2"), 2, 4);
  EXPECT_EQ(b.integral, Rational(29));
  EXPECT_TRUE(b.equal);
  EXPECT_THROW((void)gossamer::sum_to_integral_bridge(P("k"), 2, 1), gossamer::DomainError);
}

class SumProperties : public ::testing::Test {
 protected:
  gossamer::RandomSource rng{31337};
};

TEST_F(SumProperties, Telescoping) {
  for (int i = 0; i < 50; ++i) {
    const Polynomial g = rng.polynomial(6);
    const Polynomial G = gossamer::indefinite_sum(g).point_function;
    ASSERT_TRUE(G(Rational(0)).is_zero());
    ASSERT_EQ(G - G.compose(P("n - 1")), g);
    for (int n = 1; n <= 100; ++n) ASSERT_EQ(G(Rational(n)) - G(Rational(n - 1)), g(Rational(n)));
  }
}

TEST_F(SumProperties, OracleEquivalence) {
  for (int i = 0; i < 500; ++i) {
    const Polynomial g = rng.polynomial(6);
    auto a = rng.integer(-20, 100);
    auto b = rng.integer(-20, 100);
    if (a > b) std::swap(a, b);
    const auto r = gossamer::sum_ftc(g, GossamerNumber(a), GossamerNumber(b));
    ASSERT_TRUE(r.oracle_match);
    ASSERT_EQ(r.value.standard_part().raw(), oracle::interval_sum(oracle::coeffs(g), a, b));
  }
}

TEST_F(SumProperties, Additivity) {
  for (int i = 0; i < 200; ++i) {
    const Polynomial g = rng.polynomial(6);
    std::array<std::int64_t, 3> e{rng.integer(0, 60), rng.integer(0, 60), rng.integer(0, 60)};
    std::sort(e.begin(), e.end());
    const auto [a, b, c] = e;
    ASSERT_EQ(gossamer::sum_ftc(g, GossamerNumber(a), GossamerNumber(b)).value +
                  gossamer::sum_ftc(g, GossamerNumber(b + 1), GossamerNumber(c + 1)).value,
              gossamer::sum_ftc(g, GossamerNumber(a), GossamerNumber(c + 1)).value);
  }
}

TEST_F(SumProperties, AdditivityAcrossInfiniteEndpoints) {
  for (int i = 0; i < 100; ++i) {
    const Polynomial g = rng.polynomial(4);
    const GossamerNumber a(rng.integer(0, 10));
    const GossamerNumber b = w + rng.integer(-5, 5);
    const GossamerNumber c = w * w;
    ASSERT_EQ(gossamer::sum_ftc(g, a, b).value + gossamer::sum_ftc(g, b + 1, c).value, gossamer::sum_ftc(g, a, c).value);
  }
}

TEST_F(SumProperties, FactorsThroughPointFunction) {
  for (int i = 0; i < 100; ++i) {
    const Polynomial g = rng.polynomial(5);
    const auto s = gossamer::indefinite_sum(g);
    const auto a = rng.integer(1, 50);
    const auto b = a + rng.integer(0, 50);
    ASSERT_EQ(gossamer::sum_ftc(g, GossamerNumber(a), GossamerNumber(b)).value,
              gossamer::sum_at_point(s, GossamerNumber(b)) + gossamer::lower_sum_at_point(s, GossamerNumber(a - 1)));
  }
}

TEST(SumConsistency, MatchesFaulhaber) {
  for (std::size_t p = 0; p <= 10; ++p) {
    EXPECT_EQ(gossamer::indefinite_sum(Polynomial::monomial(p)).point_function,
              gossamer::faulhaber(static_cast<unsigned>(p)));
  }
}
