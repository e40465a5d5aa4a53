#include <gtest/gtest.h>

#include <vector>

#include "gossamer/errors.hpp"
#include "gossamer/gossamer_number.hpp"
#include "gossamer/random.hpp"
#include "oracles.hpp"

using gossamer::GossamerNumber;
using gossamer::Magnitude;
using gossamer::Rational;
using gossamer::Term;

namespace {

const GossamerNumber w = GossamerNumber::omega();
const GossamerNumber h = GossamerNumber::omega(-1);

GossamerNumber g(const char* text) { return GossamerNumber::parse(text); }

}  // namespace

TEST(GossamerAdd, Examples) {
  EXPECT_EQ(GossamerNumber(3) + GossamerNumber::monomial(5, -1) + GossamerNumber(-3), GossamerNumber::monomial(5, -1));
  EXPECT_EQ(gossamer::add(w, w), GossamerNumber::monomial(2, 1));
  EXPECT_EQ((1 + h * h) + h, g("1 + w^-1 + w^-2"));
}

TEST(GossamerAdd, CancellationLeavesNoZeroTerms) {
  const GossamerNumber x = g("w + 2 - w^-1");
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE((x - x).terms().empty());
}

TEST(GossamerAdd, FloorIsMaxAndFlagPropagates) {
  const GossamerNumber a = GossamerNumber::from_terms({{Rational(-5), Rational(1)}}, Rational(-20));
  const GossamerNumber b = GossamerNumber::from_terms({{Rational(0), Rational(1)}}, Rational(-3), true);
  const GossamerNumber s = a + b;
  EXPECT_EQ(s.truncation_floor(), Rational(-3));
  EXPECT_TRUE(s.truncated());
  EXPECT_EQ(s, GossamerNumber(1));  // w^-5 falls under the wider floor
}

TEST(GossamerMul, Examples) {
  EXPECT_EQ(gossamer::mul(w, h), GossamerNumber(1));
  EXPECT_EQ((1 + h).pow(2), g("1 + 2*w^-1 + w^-2"));
  EXPECT_EQ(GossamerNumber::monomial(2, 1) * GossamerNumber::monomial(3, 2), GossamerNumber::monomial(6, 3));
}

TEST(GossamerMul, DropsBelowFloorAndFlags) {
  const GossamerNumber a = GossamerNumber::omega(-10);
  const GossamerNumber p = a * a;
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.truncated());
  EXPECT_FALSE((a * w).truncated());
}

TEST(GossamerInverse, GeometricExpansion) {
  // Oracle: multiply back by 1 - w^-1 and expect 1 - w^-5.
  const GossamerNumber a = 1 - h;
  const GossamerNumber inv = gossamer::inverse(a, 4);
  EXPECT_EQ(inv, g("1 + w^-1 + w^-2 + w^-3 + w^-4"));
  EXPECT_TRUE(inv.truncated());
  const oracle::Series back = oracle::Series::of(inv) * oracle::Series::of(a);
  EXPECT_TRUE(back.matches(g("1 - w^-5")));
}

TEST(GossamerInverse, RealIsExact) {
  const GossamerNumber inv = gossamer::inverse(GossamerNumber(2), 3);
  EXPECT_EQ(inv, GossamerNumber(Rational(1, 2)));
  EXPECT_FALSE(inv.truncated());
  EXPECT_EQ(gossamer::inverse(GossamerNumber::monomial(4, 3)), GossamerNumber::monomial(Rational(1, 4), -3));
}

TEST(GossamerInverse, ThetaFromLemma) {
  const GossamerNumber theta = h * gossamer::inverse(1 - h, 3);
  EXPECT_EQ(theta, g("w^-1 + w^-2 + w^-3 + w^-4"));
  EXPECT_TRUE(theta.truncated());
  EXPECT_EQ(gossamer::geometric_theta(h, 3), theta);
}

TEST(GossamerInverse, ZeroThrows) {
  EXPECT_THROW((void)gossamer::inverse(GossamerNumber(0), 3), gossamer::DivisionByZero);
  EXPECT_THROW((void)(GossamerNumber(1) / GossamerNumber(0)), gossamer::DivisionByZero);
}

TEST(GossamerCompare, Examples) {
  EXPECT_EQ(gossamer::compare(h, GossamerNumber(0)), std::strong_ordering::greater);
  EXPECT_EQ(gossamer::compare(h, GossamerNumber::omega(-2)), std::strong_ordering::greater);
  EXPECT_EQ(gossamer::compare(GossamerNumber(5), w), std::strong_ordering::less);
  EXPECT_EQ(gossamer::compare(g("1/2"), g("1/2")), std::strong_ordering::equal);
  EXPECT_LT(-w, GossamerNumber(-1000000));
}

TEST(GossamerCompare, DoesNotLoseDeepDifferences) {
  // The difference lies below the default floor, but the order is still decided.
  const GossamerNumber a = GossamerNumber::from_terms({{Rational(0), Rational(1)}, {Rational(-15), Rational(1)}}, Rational(-15));
  const GossamerNumber b = GossamerNumber::from_terms({{Rational(0), Rational(1)}, {Rational(-15), Rational(2)}}, Rational(-15));
  EXPECT_LT(a, b);
}

TEST(GossamerClassify, Examples) {
  EXPECT_EQ(gossamer::classify(h + GossamerNumber::omega(-3)), Magnitude::infinitesimal);
  EXPECT_EQ(gossamer::classify(3 + h), Magnitude::finite_appreciable);
  EXPECT_EQ(gossamer::classify(w * w - 7), Magnitude::infinite);
  EXPECT_EQ(gossamer::classify(GossamerNumber(0)), Magnitude::zero);
  EXPECT_EQ(gossamer::to_string(Magnitude::finite_appreciable), "finite_appreciable");
}

TEST(GossamerMagnitude, MuchLess) {
  EXPECT_TRUE(gossamer::much_less(h, GossamerNumber(1)));
  EXPECT_FALSE(gossamer::much_less(GossamerNumber(3), GossamerNumber(5)));
  EXPECT_TRUE(gossamer::much_less(w.pow(2), w.pow(3)));
  EXPECT_TRUE(gossamer::much_less(-w, w.pow(2)));  // magnitude, not sign
  EXPECT_THROW((void)gossamer::much_less(GossamerNumber(0), w), gossamer::ZeroMagnitude);
  EXPECT_THROW((void)gossamer::much_less(w, GossamerNumber(0)), gossamer::ZeroMagnitude);
}

TEST(GossamerMagnitude, AsymptoticSim) {
  EXPECT_TRUE(gossamer::asymptotic_sim(w + 1, w - 5));
  EXPECT_FALSE(gossamer::asymptotic_sim(GossamerNumber::monomial(2, 1), w));
  EXPECT_TRUE(gossamer::asymptotic_sim(g("1/3 + 1/2*w^-1"), g("1/3")));
  EXPECT_THROW((void)gossamer::asymptotic_sim(GossamerNumber(0), w), gossamer::ZeroMagnitude);
}

TEST(GossamerMagnitude, InfinitelyClose) {
  EXPECT_TRUE(gossamer::infinitely_close(3 + h, GossamerNumber(3)));
  EXPECT_FALSE(gossamer::infinitely_close(GossamerNumber(3), GossamerNumber(4)));
  EXPECT_TRUE(gossamer::infinitely_close(w, w + h));
  EXPECT_TRUE(gossamer::infinitely_close(GossamerNumber(0), GossamerNumber(0)));
  EXPECT_FALSE(gossamer::infinitely_close(w, GossamerNumber(0)));
}

TEST(GossamerStandardPart, Examples) {
  EXPECT_EQ(gossamer::standard_part(g("1/3 + 1/2*w^-1 + 1/6*w^-2")), Rational(1, 3));
  EXPECT_EQ(gossamer::standard_part(h), Rational(0));
  EXPECT_THROW((void)gossamer::standard_part(w + 2), gossamer::InfinitePartPresent);
}

TEST(GossamerRealize, Examples) {
  const GossamerNumber r = gossamer::realize(w + 1 + h, Rational(0));
  EXPECT_EQ(r, w + 1);
  EXPECT_TRUE(r.truncated());
  const GossamerNumber five = gossamer::realize(GossamerNumber(5), Rational(-10));
  EXPECT_EQ(five, GossamerNumber(5));
  EXPECT_FALSE(five.truncated());
  EXPECT_EQ(gossamer::realize(g("1 + w^-1 + w^-2"), Rational(-1)), g("1 + w^-1"));
}

TEST(GossamerRealize, ZeroFloorGivesStandardPart) {
  const GossamerNumber x = g("-7/2 + 3*w^-1 - w^(-1/2)");
  EXPECT_EQ(gossamer::realize(x, Rational(0)).coefficient(Rational(0)), x.standard_part());
}

TEST(GossamerBoundedSeries, Examples) {
  const std::vector<Rational> ones{1, 1, 1};
  const GossamerNumber s = gossamer::bounded_series_sum(ones, h, 3);
  EXPECT_EQ(s, g("w^-1 + w^-2 + w^-3"));
  EXPECT_EQ(s.classify(), Magnitude::infinitesimal);

  const std::vector<Rational> zeros{0, 0, 0};
  EXPECT_TRUE(gossamer::bounded_series_sum(zeros, h, 3).is_zero());

  const std::vector<Rational> c{2, -3};
  const GossamerNumber h2 = GossamerNumber::omega(-2);
  const GossamerNumber t = gossamer::bounded_series_sum(c, h2, 2);
  EXPECT_EQ(t, g("2*w^-2 - 3*w^-4"));
  EXPECT_EQ(t.classify(), Magnitude::infinitesimal);
  const GossamerNumber theta = h2 * gossamer::inverse(1 - h2);
  EXPECT_LE(t.abs(), GossamerNumber(3) * theta);
}

TEST(GossamerBoundedSeries, MissingCoefficientsAreZeroAndErrors) {
  const std::vector<Rational> c{5};
  EXPECT_EQ(gossamer::bounded_series_sum(c, h, 4), GossamerNumber::monomial(5, -1));
  EXPECT_THROW((void)gossamer::bounded_series_sum(c, GossamerNumber(Rational(1, 2)), 3),
               gossamer::DomainError);
  EXPECT_THROW((void)gossamer::bounded_series_sum(c, w, 3), gossamer::DomainError);
  EXPECT_THROW((void)gossamer::bounded_series_sum(std::vector<Rational>{}, h, 3), gossamer::DomainError);
}

TEST(GossamerText, RenderAndParse) {
  EXPECT_EQ(g("1/3 + 1/2*w^-1").str(), "1/3 + 1/2*w^-1");
  EXPECT_EQ((w - 1).str(), "w - 1");
  EXPECT_EQ(GossamerNumber::monomial(-2, Rational(1, 2)).str(), "-2*w^(1/2)");
  EXPECT_EQ(GossamerNumber(0).str(), "0");
  EXPECT_EQ(g("w^2 - 3/4*w + 5 - w^-3").str(), "w^2 - 3/4*w + 5 - w^-3");
  EXPECT_EQ(g("  -w  "), -w);
  EXPECT_EQ(g("2*w^(-3/2) + w^(-3/2)"), GossamerNumber::monomial(3, Rational(-3, 2)));
}

TEST(GossamerText, ParseErrors) {
  EXPECT_THROW((void)g(""), gossamer::ParseError);
  EXPECT_THROW((void)g("1 +"), gossamer::ParseError);
  EXPECT_THROW((void)g("w^"), gossamer::ParseError);
  EXPECT_THROW((void)g("3 x"), gossamer::ParseError);
}

// Randomized properties. Random values keep exponents within [-3, 3], so triple
// products stay above the default floor and every identity is exact.

class GossamerProperties : public ::testing::Test {
 protected:
  gossamer::RandomSource rng{20240611};
  static constexpr int kCases = 300;
};

TEST_F(GossamerProperties, FieldAxioms) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    const GossamerNumber b = rng.gossamer();
    const GossamerNumber c = rng.gossamer();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a + (-a)).is_zero());
    ASSERT_EQ(a + 0, a);
    ASSERT_EQ(a * 1, a);
  }
}

TEST_F(GossamerProperties, ArithmeticMatchesTermMapOracle) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer(4, 6);
    const GossamerNumber b = rng.gossamer(4, 6);
    const auto sa = oracle::Series::of(a);
    const auto sb = oracle::Series::of(b);
    ASSERT_TRUE((sa + sb).matches(a + b)) << a << " + " << b;
    ASSERT_TRUE((sa * sb).matches(a * b)) << a << " * " << b;
  }
}

TEST_F(GossamerProperties, MultiplicativeInverseUpToFloor) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    if (a.is_zero()) continue;
    const GossamerNumber inv = gossamer::inverse(a);
    const oracle::Series prod = oracle::Series::of(a) * oracle::Series::of(inv);
    oracle::Series one;
    one.terms[0] = -1;
    oracle::Series residual = prod + one;
    residual.floor = -1000;
    residual.clean();
    if (residual.terms.empty()) continue;
    const Rational lead = oracle::r(residual.terms.rbegin()->first);
    const Rational bound = a.truncation_floor() + gossamer::max(Rational(0), *a.leading_exponent());
    ASSERT_LT(lead, bound) << a;
  }
}

TEST_F(GossamerProperties, OrderCompatibility) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    const GossamerNumber b = rng.gossamer();
    const GossamerNumber c = rng.gossamer();
    if (a < b) { ASSERT_LT(a + c, b + c); }
    if (a > 0 && b > 0) { ASSERT_GT(a * b, GossamerNumber(0)); }
    ASSERT_EQ(gossamer::compare(a, b) == std::strong_ordering::less, (b - a).sign() > 0);
  }
}

TEST_F(GossamerProperties, StandardPartIsHomomorphism) {
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    const GossamerNumber b = rng.gossamer();
    if (a.classify() == Magnitude::infinite || b.classify() == Magnitude::infinite) continue;
    ++checked;
    ASSERT_EQ((a + b).standard_part(), a.standard_part() + b.standard_part());
    ASSERT_EQ((a * b).standard_part(), a.standard_part() * b.standard_part());
  }
  EXPECT_GT(checked, 20);
}

TEST_F(GossamerProperties, MagnitudeTrichotomy) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    const GossamerNumber b = rng.gossamer();
    if (a.is_zero() || b.is_zero()) continue;
    const int count = static_cast<int>(gossamer::much_less(a, b)) + static_cast<int>(gossamer::much_less(b, a)) +
                      static_cast<int>(*a.leading_exponent() == *b.leading_exponent());
    ASSERT_EQ(count, 1);
  }
}

TEST_F(GossamerProperties, AsymptoticDecomposition) {
  int checked = 0;
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer();
    if (a.is_zero()) continue;
    const GossamerNumber b = a + rng.gossamer(2, 3) * GossamerNumber::omega(*a.leading_exponent() - 4);
    if (b.is_zero() || !gossamer::asymptotic_sim(a, b)) continue;
    ++checked;
    const GossamerNumber c = b - a;
    ASSERT_TRUE(c.is_zero() || (gossamer::much_less(c, a) && gossamer::much_less(c, b)));
  }
  EXPECT_GT(checked, 50);
}

TEST_F(GossamerProperties, BoundedSeriesStaysInPhi) {
  for (int i = 0; i < kCases; ++i) {
    std::vector<Rational> coeffs;
    const auto n = rng.integer(1, 6);
    for (int k = 0; k < n; ++k) coeffs.push_back(rng.rational());
    const GossamerNumber step = GossamerNumber::omega(-rng.integer(1, 3));
    const auto m = gossamer::bounded_series_sum(coeffs, step, static_cast<std::size_t>(rng.integer(1, 5))).classify();
    ASSERT_TRUE(m == Magnitude::zero || m == Magnitude::infinitesimal);
  }
}

TEST_F(GossamerProperties, RationalsEmbed) {
  for (int i = 0; i < kCases; ++i) {
    const Rational x = rng.rational();
    const Rational y = rng.rational();
    ASSERT_EQ(GossamerNumber(x) + GossamerNumber(y), GossamerNumber(x + y));
    ASSERT_EQ(GossamerNumber(x) * GossamerNumber(y), GossamerNumber(x * y));
    ASSERT_EQ(GossamerNumber(x) < GossamerNumber(y), x < y);
    if (!y.is_zero()) {
      const GossamerNumber q = GossamerNumber(x) / GossamerNumber(y);
      ASSERT_EQ(q, GossamerNumber(x / y));
      ASSERT_FALSE(q.truncated());
    }
  }
}

TEST_F(GossamerProperties, TextRoundTrip) {
  for (int i = 0; i < kCases; ++i) {
    const GossamerNumber a = rng.gossamer(5, 8);
    ASSERT_EQ(GossamerNumber::parse(a.str()), a) << a.str();
  }
}
