#include <gtest/gtest.h>

#include "modunits/errors.hpp"
#include "modunits/upoly.hpp"

using modunits::UniPoly;

namespace {
UniPoly up(std::vector<long> c) {
  std::vector<mpz_class> v(c.begin(), c.end());
  return UniPoly(std::move(v));
}
}  // namespace

TEST(UniPoly, ArithmeticAndEvaluate) {
  const UniPoly x = UniPoly::x();
  const UniPoly f = (x + UniPoly(1)).pow(3);
  EXPECT_EQ(f, up({1, 3, 3, 1}));
  EXPECT_EQ(f.evaluate(2), 27);
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(up({0, 0, 5}).low_degree(), 2u);
  EXPECT_EQ(up({6, 4, 2}).content(), 2);
}

TEST(UniPoly, ExactDivision) {
  const UniPoly a = up({-1, 0, 1});
  EXPECT_EQ(div_exact(a, up({1, 1})), up({-1, 1}));
  EXPECT_THROW(div_exact(a, up({2, 1})), modunits::NotDivisible);
  EXPECT_EQ(div_exact(up({4, 6}), mpz_class(2)), up({2, 3}));
  EXPECT_THROW(div_exact(up({4, 5}), mpz_class(2)), modunits::NotDivisible);
}

TEST(UniPoly, Gcd) {
  const UniPoly g = up({1, 1});
  const UniPoly a = g * up({-2, 0, 3});
  const UniPoly b = g * g * up({5, 1});
  EXPECT_EQ(gcd(a, b), g);
  EXPECT_EQ(gcd(up({2, 2}), up({4, 4})), up({2, 2}));
  EXPECT_EQ(gcd(up({3}), up({0, 1})), UniPoly(1));
  EXPECT_EQ(gcd(UniPoly(), up({0, -2})), up({0, 2}));
}

TEST(UniPoly, Text) { EXPECT_EQ(up({1, 0, -2}).to_string('c'), "-2*c^2 + 1"); }
