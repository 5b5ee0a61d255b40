#include <gtest/gtest.h>

#include "powstruct/graded.hpp"
#include "powstruct/numtheory.hpp"
#include "powstruct/power_structure.hpp"
#include "support.hpp"

using namespace powstruct;
using namespace testing_support;

namespace {

using Series = TruncSeries<LaurentPoly>;

Series exp_t(int order) {
  std::vector<LaurentPoly> c;
  for (int n = 0; n <= order; ++n) c.push_back(qc(ratio(1, factorial(n))));
  return Series(c);
}

TEST(LambdaT, Examples) {
  for (int j = 0; j <= 3; ++j) {
    const auto s = lambda_t(L(j), 3);
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(s[k], L(j * k));
  }
  EXPECT_EQ(lambda_t(LaurentPoly(kL), 5), Series::one(5, L()));
}

TEST(LambdaT, GradedGenerator) {
  for (int j = 1; j <= 5; ++j) {
    const auto s = lambda_t(GradedElement::homogeneous(j, 1), 3);
    const Rational two = Rational(Integer(1) << (j - 1));
    Integer three = 1;
    for (int i = 1; i < j; ++i) three *= 3;
    EXPECT_EQ(s[0].total(), 1);
    EXPECT_EQ(s[1].total(), 1);
    EXPECT_EQ(s[2].total(), two + ratio(1, 2)) << j;
    EXPECT_EQ(s[3].total(), Rational(three) + two + ratio(1, 6)) << j;
    // (x^2 + Psi_2 x)/2: x^2 sits in degree 2j, Psi_2 x stays in degree j
    EXPECT_EQ(s[2].component(2 * j), ratio(1, 2));
    EXPECT_EQ(s[2].component(j), two);
  }
}

TEST(LambdaT, AdditivityAndLogDerivative) {
  std::mt19937_64 rng(31);
  const Alphabet uv{"u", "v"};
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly x = random_int_poly(rng, uv, 1), y = random_int_poly(rng, uv, 1);
    EXPECT_EQ(lambda_t(x + y, 6), lambda_t(x, 6) * lambda_t(y, 6));
    const auto c = log_derivative(lambda_t(x, 8));
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(c[n - 1], adams(x, n));
  }
}

TEST(Factorize, Examples) {
  const int N = 8;
  const auto f = factorize(Series::binomial(N, qc(1), 1));
  EXPECT_EQ(f[1], qc(1));
  EXPECT_EQ(f[2], qc(-1));
  for (int k = 3; k <= N; ++k) EXPECT_TRUE(f[k].is_zero()) << k;

  const auto fe = factorize(exp_t(12));
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(fe[n], qc(ratio(mobius(n), n))) << n;

  Series geometric = Series::one(N, L()) / Series::binomial(N, -L(), 1);
  for (auto algo : {FactorizeAlgorithm::iterative, FactorizeAlgorithm::moebius}) {
    const auto fl = factorize(geometric, algo);
    EXPECT_EQ(fl[1], L());
    for (int k = 2; k <= N; ++k) EXPECT_TRUE(fl[k].is_zero());
  }
  EXPECT_THROW(factorize(Series(4, qc(0))), DomainError);
}

TEST(Factorize, AlgorithmsAgreeAndRecompose) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const Series a = random_unit_series(rng, kL, 8, 2);
    const auto fi = factorize(a, FactorizeAlgorithm::iterative);
    const auto fm = factorize(a, FactorizeAlgorithm::moebius);
    EXPECT_EQ(fi, fm);
    EXPECT_EQ(recompose(fm, 8), a);
  }
}

TEST(Recompose, Examples) {
  FactorizationResult<LaurentPoly> b;
  b.exponents = {L()};
  EXPECT_EQ(recompose(b, 5), Series::one(5, L()) / Series::binomial(5, -L(), 1));
  EXPECT_EQ(recompose(FactorizationResult<LaurentPoly>{}, 4, L()), Series::one(4, L()));
}

TEST(Power, Examples) {
  const int N = 6;
  const Series geometric = Series::one(N, L()) / Series::binomial(N, -lc(1), 1);
  const LaurentPoly x = L(2) + L() * Rational(3);
  for (auto algo : {PowerAlgorithm::factorize_route, PowerAlgorithm::theorem2})
    EXPECT_EQ(power(geometric, x, algo), lambda_t(x, N));

  std::mt19937_64 rng(3);
  const Series a = random_unit_series(rng, kL, N, 2);
  EXPECT_EQ(power(a, LaurentPoly(kL)), Series::one(N, L()));
  EXPECT_EQ(power(a, lc(1)), a);

  const auto s = power(Series::binomial(N, lc(1), 1), lc(1) + L());
  EXPECT_EQ(s[0], lc(1));
  EXPECT_EQ(s[1], lc(1) + L());
  EXPECT_EQ(s[2], L(2));
  for (int k = 3; k <= N; ++k) EXPECT_EQ(s[k], L(k) - L(k - 2)) << k;
  // closed form (1 - L t^2)(1 + t)/(1 - L t)
  const Series closed =
      Series::binomial(N, -L(), 2) * Series::binomial(N, lc(1), 1) / Series::binomial(N, -L(), 1);
  EXPECT_EQ(s, closed);
}

TEST(Power, AlgorithmsAgree) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Series a = random_unit_series(rng, kL, 7, 2);
    const LaurentPoly x = random_poly(rng, kL, 2);
    EXPECT_EQ(power(a, x, PowerAlgorithm::factorize_route), power(a, x, PowerAlgorithm::theorem2));
  }
}

TEST(Power, SymmetricFunctionBase) {
  const int N = 5;
  const Alphabet uv{"u", "v"};
  const SymFunc x = SymFunc::lift(var(uv, "u") * var(uv, "v") + LaurentPoly::from_constant(uv, 1), N);
  const auto base = TruncSeries<SymFunc>::binomial(N, SymFunc::power_sum(uv, N, 1), 1);
  EXPECT_EQ(power(base, x, PowerAlgorithm::factorize_route), power(base, x, PowerAlgorithm::theorem2));
}

TEST(BinomialPower, MatchesPower) {
  const int N = 6;
  const Alphabet uv{"u", "v"};
  const LaurentPoly ex = var(uv, "u") * var(uv, "v") - var(uv, "u") + LaurentPoly::from_constant(uv, 2);
  const SymFunc p1 = SymFunc::power_sum(uv, N, 1);
  const SymFunc x = SymFunc::lift(ex, N);
  EXPECT_EQ(binomial_power(p1, x, N), power(TruncSeries<SymFunc>::binomial(N, p1, 1), x));
  EXPECT_EQ(binomial_power(p1, p1.constant(1), N), TruncSeries<SymFunc>::binomial(N, p1, 1));

  // a = 1 over Q with a polynomial exponent in q
  const Alphabet q{"q"};
  const LaurentPoly pq = LaurentPoly::from_constant(q, 1) + var(q, "q", 2) * Rational(3);
  EXPECT_EQ(binomial_power(LaurentPoly::from_constant(q, 1), pq, N),
            power(Series::binomial(N, LaurentPoly::from_constant(q, 1), 1), pq));
}

TEST(Axioms, HoldOnRandomInputs) {
  std::mt19937_64 rng(47);
  const int N = 6;
  for (int trial = 0; trial < 6; ++trial) {
    const Series a = random_unit_series(rng, kL, N, 1), b = random_unit_series(rng, kL, N, 1);
    const LaurentPoly m = random_int_poly(rng, kL, 1), n = random_int_poly(rng, kL, 1);
    EXPECT_EQ(power(a * b, m), power(a, m) * power(b, m));
    EXPECT_EQ(power(a, m + n), power(a, m) * power(a, n));
    EXPECT_EQ(power(a, m * n), power(power(a, n), m));
    const auto lin = power(Series::binomial(N, lc(1), 1), m);
    EXPECT_EQ(lin[1], m);
    for (int k = 2; k <= 3; ++k) EXPECT_EQ(power(substitute_tk(a, k), m), substitute_tk(power(a, m), k));
  }
}

TEST(VerifyIdentity, RegisteredChecks) {
  EXPECT_TRUE(verify_identity("exp_moebius", 12).holds);
  EXPECT_TRUE(verify_identity("euler_phi", 12).holds);
  const auto gcd = verify_identity("gcd_product", 6);
  EXPECT_FALSE(gcd.holds);
  ASSERT_TRUE(gcd.first_discrepancy.has_value());
  EXPECT_EQ(gcd.first_discrepancy->t_power, 2);
  EXPECT_EQ(gcd.first_discrepancy->lhs, "-1/2");
  EXPECT_EQ(gcd.first_discrepancy->rhs, "0");
  EXPECT_THROW(verify_identity("nonsense", 4), DomainError);
  EXPECT_EQ(identity_names().size(), 3u);
}

}  // namespace
