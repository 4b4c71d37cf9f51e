#include <gtest/gtest.h>

#include <random>

#include "modunits/curve_series.hpp"
#include "modunits/errors.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"
#include "modunits/verify.hpp"
#include "oracles.hpp"

using modunits::ExpVector;

TEST(ExpVector, BasicsAndLedger) {
  const ExpVector e(7, {36, -36, 12});
  EXPECT_EQ(e.m(), 3);
  EXPECT_EQ(e.at(2), -36);
  EXPECT_EQ(e.ledger(), (modunits::Ledger{12, 0}));
  EXPECT_EQ(ExpVector::unit(7, 2), ExpVector(7, {0, 1, 0}));
  EXPECT_TRUE(ExpVector::zero(9).is_zero());
  EXPECT_EQ(2 * e - e, e);
  EXPECT_THROW(ExpVector(7, {1, 2}), modunits::Error);
  EXPECT_THROW(ExpVector(7, {1, 2, 3}) + ExpVector(8, {1, 2, 3, 4}), modunits::Error);
}

TEST(Lattice, Membership) {
  EXPECT_TRUE(is_in_S(ExpVector(7, {36, -36, 12})));
  for (int N = 4; N <= 20; ++N) EXPECT_TRUE(is_in_S(ExpVector::zero(N)));
  EXPECT_FALSE(is_in_S(ExpVector(7, {1, 0, 0})));
  EXPECT_EQ(modunits::second_modulus(7), 7);
  EXPECT_EQ(modunits::second_modulus(8), 16);
}

TEST(Lattice, BasisRankMembershipAndIndex) {
  for (int N = 4; N <= 40; ++N) {
    const auto lb = modunits::basis_S(N);
    ASSERT_EQ(lb.vectors.size(), static_cast<std::size_t>(N / 2));
    for (const auto& v : lb.vectors) {
      ASSERT_TRUE(is_in_S(v));
      ASSERT_TRUE(modunits::leading_exponent_check(v));
    }
    // Index equals the size of the image of the congruence map.
    ASSERT_EQ(lb.index, oracle::congruence_image_size(N)) << N;
  }
  EXPECT_EQ(modunits::basis_S(9).vectors.size(), 4u);
  EXPECT_THROW(modunits::basis_S(3), modunits::BadIndex);
}

TEST(Lattice, BasisSpansSample) {
  // Every sampled element of S is an integer combination of the basis: solve
  // the triangular system.
  for (int N : {5, 8, 12, 15}) {
    const auto lb = modunits::basis_S(N);
    for (const auto& e : modunits::random_sample_of_S(N, 40, 7, 3)) {
      ExpVector rest = e;
      for (std::size_t i = 0; i < lb.vectors.size(); ++i) {
        const auto piv = lb.vectors[i].e[i];
        ASSERT_EQ(rest.e[i] % piv, 0);
        rest -= lb.vectors[i] * (rest.e[i] / piv);
      }
      ASSERT_TRUE(rest.is_zero());
    }
  }
}

TEST(Dictionary, KnownVectors) {
  EXPECT_EQ(modunits::t_to_h(7), ExpVector(7, {2, -3, 1}));
  EXPECT_EQ(modunits::t_to_h(7).ledger(), (modunits::Ledger{0, -1}));
  EXPECT_EQ(modunits::d_to_h(7), ExpVector(7, {36, -36, 12}));
  EXPECT_EQ(modunits::d_to_h(7).ledger(), (modunits::Ledger{12, 0}));
  const auto p2 = modunits::p_to_h(2, 7);
  ASSERT_TRUE(p2);
  EXPECT_EQ(p2->sign, 1);
  EXPECT_EQ(p2->e, ExpVector(7, {5, -8, 3}));
  EXPECT_FALSE(modunits::p_to_h(5, 5).has_value());
  EXPECT_FALSE(modunits::p_to_h(10, 5).has_value());
  // N = 5: 3 folds onto 2 with a sign.
  const ExpVector t5 = modunits::t_to_h(5);
  EXPECT_EQ(t5, ExpVector(5, {2, -2}));
  EXPECT_EQ(t5.ledger(), (modunits::Ledger{0, -6}));
  EXPECT_EQ(((t5.ledger().sum2 + 1) % 5), 0);
  EXPECT_EQ(modunits::v_to_h(8), modunits::t_to_h(8) * 16);
}

TEST(Dictionary, LedgersFollowExpectedValues) {
  for (int N = 4; N <= 30; ++N) {
    for (const auto& r : modunits::check_ledgers(N)) {
      EXPECT_TRUE(r.pass) << r.check << " N=" << N << " " << r.detail;
    }
  }
}

TEST(Dictionary, PExpression) {
  const auto p = modunits::to_p_expression(ExpVector(5, {12, 12}));
  EXPECT_EQ(p.alpha, 2);
  EXPECT_EQ(p.beta, 12);
  EXPECT_EQ(p.pexp, (std::vector<std::int64_t>{12, 12}));
  const auto z = modunits::to_p_expression(ExpVector::zero(9));
  EXPECT_EQ(z.alpha, 0);
  EXPECT_EQ(z.beta, 0);
  const ExpVector d = modunits::d_to_h(11);
  const auto pd = modunits::to_p_expression(d);
  EXPECT_EQ(pd.alpha, 1);
  EXPECT_EQ(pd.beta, 0);
  EXPECT_EQ(modunits::expand_p_expression(pd).e, d);
  EXPECT_THROW(modunits::to_p_expression(ExpVector(7, {1, 0, 0})), modunits::NotInS);
}

TEST(Dictionary, RoundTripOnRandomSample) {
  for (int N = 4; N <= 25; ++N) {
    const auto sample = modunits::random_sample_of_S(N, 30, 5, 77);
    for (const auto& e : sample) {
      ASSERT_TRUE(is_in_S(e));
      ASSERT_EQ(modunits::expand_p_expression(modunits::to_p_expression(e)).e, e) << N;
    }
  }
}

TEST(Dictionary, PSeriesMatchesDefinition) {
  // p_2 = -b at N = 7: the Siegel product of p_to_h(2) equals t^3 h_2 / h_1.
  const int N = 7;
  const long prec = 40;
  const auto p2 = modunits::p_to_h(2, N);
  const auto series = modunits::product_series(p2->e, prec).to_series();
  const auto t = modunits::product_series(modunits::t_to_h(N), prec);
  const auto rhs = (t * t * t * modunits::product_series(ExpVector::unit(N, 2), prec) *
                    modunits::product_series(-ExpVector::unit(N, 1), prec))
                       .to_series();
  EXPECT_TRUE(agrees(series, rhs));
  // Leading exponent n(n-1)/(2N) for n <= m.
  for (int n = 1; n <= 3; ++n) {
    mpq_class want(n * (n - 1), 2 * N);
    want.canonicalize();
    EXPECT_EQ(modunits::leading_exponent_value(modunits::p_to_h(n, N)->e), want);
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(modunits::decompose_series(modunits::QSeries::one(7, 10), 7), ExpVector::zero(7));
  EXPECT_EQ(modunits::decompose_series(modunits::h_star(2, 5, 12), 5), ExpVector(5, {0, 1}));
  EXPECT_EQ(modunits::decompose_series(modunits::h_star(3, 6, 12), 6), ExpVector(6, {0, 0, 1}));
}

TEST(Decompose, Errors) {
  EXPECT_THROW(modunits::decompose_series(modunits::QSeries::one(7, 2), 7), modunits::InsufficientPrecision);
  EXPECT_THROW(modunits::decompose_series(modunits::QSeries::one(5, 10), 7), modunits::PrecisionMismatch);
  // 1 + x/2: exponent would be -1/2.
  const modunits::QSeries half(7, 0, {mpq_class(1), mpq_class(1, 2)}, 10);
  EXPECT_THROW(modunits::decompose_series(half, 7), modunits::NotAUnitProduct);
  // 1 + x^5 at N = 7 is no product of h_star: caught by the residual check.
  std::vector<mpq_class> c(10);
  c[0] = 1;
  c[5] = 1;
  EXPECT_THROW(modunits::decompose_series(modunits::QSeries(7, 0, c, 10), 7), modunits::NotAUnitProduct);
  // Odd half coefficient when 2k = N.
  std::vector<mpq_class> h(10);
  h[0] = 1;
  h[3] = -1;
  EXPECT_THROW(modunits::decompose_series(modunits::QSeries(6, 0, h, 10), 6), modunits::NotAUnitProduct);
}

TEST(Decompose, RoundTripOnRandomVectors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  for (int N = 4; N <= 16; ++N) {
    for (int t = 0; t < 10; ++t) {
      ExpVector e = ExpVector::zero(N);
      for (auto& x : e.e) x = d(rng);
      const auto fstar = modunits::product_series(e, N / 2 + 1 + N).fstar;
      ASSERT_EQ(modunits::decompose_series(fstar, N), e);
    }
  }
}

TEST(LeadingExponent, Examples) {
  EXPECT_TRUE(modunits::leading_exponent_check(modunits::d_to_h(7)));
  EXPECT_EQ(modunits::leading_exponent_value(modunits::d_to_h(7)), 1);
  const ExpVector e(7, {1, 0, 0});
  EXPECT_EQ(modunits::leading_exponent_value(e), modunits::lead_exponent(1, 7));
  EXPECT_FALSE(modunits::leading_exponent_check(e));
  for (int N = 4; N <= 20; ++N) {
    for (const auto& v : modunits::random_sample_of_S(N, 20, 6, 9)) ASSERT_TRUE(modunits::leading_exponent_check(v));
  }
}
