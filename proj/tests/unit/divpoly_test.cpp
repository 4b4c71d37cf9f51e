#include <gtest/gtest.h>

#include <thread>

#include "modunits/divpoly.hpp"
#include "modunits/errors.hpp"
#include "test_util.hpp"

using modunits::BivarPoly;
using modunits::DivPolyCache;
using testutil::P;

TEST(DivPoly, SeedsAndTable) {
  DivPolyCache cache;
  EXPECT_TRUE(cache.P(0).is_zero());
  EXPECT_EQ(cache.P(1), P("1"));
  EXPECT_EQ(cache.P(2), P("-B"));
  EXPECT_EQ(cache.P(3), P("-B^3"));
  EXPECT_EQ(cache.P(4), P("C*B^5"));
  EXPECT_EQ(cache.P(5), P("-1") * P("-B + C") * P("B^8"));
  EXPECT_EQ(cache.P(6), P("-B^12") * P("C^2 - B + C"));
  EXPECT_EQ(cache.P(7), P("B^16") * P("C^3 - B^2 + B*C"));
  EXPECT_EQ(cache.P(8), P("C*B^21") * P("B*C^2 - 2*B^2 + 3*B*C - C^2"));
}

TEST(DivPoly, Oddness) {
  DivPolyCache cache;
  EXPECT_EQ(cache.P(-3), P("B^3"));
  for (long n = 1; n <= 12; ++n) EXPECT_EQ(cache.P(-n), -cache.P(n));
}

TEST(DivPoly, MatchesNaiveRecurrenceOracle) {
  const auto naive = oracle::division_polys(22);
  DivPolyCache cache;
  for (int n = 0; n <= 22; ++n) {
    ASSERT_EQ(oracle::from_bivar(cache.P(n)), naive[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(DivPoly, Discriminant) {
  const BivarPoly D = modunits::tate_discriminant();
  EXPECT_EQ(D.coeff(3, 4), 1);
  EXPECT_EQ(D, P("B^3") * P("C^4 - 8*B*C^2 - 3*C^3 + 16*B^2 - 20*B*C + 3*C^2 + B - C"));
  const modunits::UniPoly c = modunits::UniPoly::x();
  // N = 5: B = C = c.
  EXPECT_EQ(D.substitute(c, c), c.pow(5) * (c.pow(2) - c * mpz_class(11) - modunits::UniPoly(1)));
  // N = 6: B = c(c+1), C = c.
  const modunits::UniPoly c1 = c + modunits::UniPoly(1);
  EXPECT_EQ(D.substitute(c * c1, c), c.pow(6) * c1.pow(3) * (c * mpz_class(9) + modunits::UniPoly(1)));
}

TEST(DivPoly, DefiningPolynomials) {
  DivPolyCache cache;
  EXPECT_EQ(std::get<BivarPoly>(cache.F(3)), P("B"));
  EXPECT_EQ(cache.defining_polynomial(4), P("C"));
  EXPECT_EQ(cache.defining_polynomial(5), P("C - B"));
  EXPECT_EQ(cache.defining_polynomial(6), P("C^2 - B + C"));
  EXPECT_EQ(cache.defining_polynomial(7), P("C^3 - B^2 + B*C"));
  EXPECT_EQ(to_text(cache.defining_polynomial(8)), "B*C^2 - 2*B^2 + 3*B*C - C^2");
  const auto f2 = std::get<modunits::RatPoly>(cache.F(2));
  EXPECT_EQ(f2.num(), P("B"));
  EXPECT_EQ(f2.den(), P("C^4 - 8*B*C^2 - 3*C^3 + 16*B^2 - 20*B*C + 3*C^2 + B - C"));
  EXPECT_EQ(f2, cache.F2());
  EXPECT_THROW(cache.defining_polynomial(2), modunits::BadIndex);
}

TEST(DivPoly, DefiningPolynomialProperties) {
  DivPolyCache cache;
  for (long n = 4; n <= 13; ++n) {
    const BivarPoly F = cache.defining_polynomial(n);
    // Primitive, normalized, and divides P_n.
    ASSERT_EQ(F.content(), 1);
    ASSERT_GT(F.grlex_c_lead().coeff, 0);
    ASSERT_NO_THROW(div_exact(cache.P(n), F));
    // Coprime to D and to every earlier P_d.
    ASSERT_EQ(gcd(F, cache.discriminant()), P("1"));
    for (long d = 2; d < n; ++d) ASSERT_EQ(gcd(F, cache.P(d)), P("1")) << n << " " << d;
  }
}

TEST(DivPoly, FactorPOverF) {
  DivPolyCache cache;
  auto f8 = cache.factor_P_over_F(8);
  EXPECT_EQ(f8.sign, 1);
  EXPECT_EQ(f8.f_exponents, (std::map<long, long>{{3, 21}, {4, 1}, {8, 1}}));
  EXPECT_EQ(f8.d_exponent, 0);
  auto f6 = cache.factor_P_over_F(6);
  EXPECT_EQ(f6.sign, -1);
  EXPECT_EQ(f6.f_exponents, (std::map<long, long>{{3, 12}, {6, 1}}));
  auto f2 = cache.factor_P_over_F(2);
  EXPECT_EQ(f2.sign, -1);
  EXPECT_EQ(f2.f_exponents, (std::map<long, long>{{3, 1}}));
  for (long n = 2; n <= 16; ++n) {
    ASSERT_EQ(expand(cache.factor_P_over_F(n), cache), cache.P(n)) << n;
  }
}

TEST(DivPoly, RangeChecks) {
  DivPolyCache cache(10);
  EXPECT_THROW(cache.P(11), modunits::RangeError);
  EXPECT_THROW(cache.defining_polynomial(11), modunits::RangeError);
  EXPECT_NO_THROW(cache.P(10));
  EXPECT_THROW(cache.factor_P_over_F(1), modunits::BadIndex);
}

TEST(DivPoly, ThreadSafeMemo) {
  DivPolyCache shared;
  std::vector<std::thread> ts;
  std::vector<BivarPoly> out(4);
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = shared.defining_polynomial(9 + i % 2); });
  for (auto& t : ts) t.join();
  DivPolyCache fresh;
  EXPECT_EQ(out[0], fresh.defining_polynomial(9));
  EXPECT_EQ(out[1], fresh.defining_polynomial(10));
}

namespace {
struct CountingStore : modunits::PolyStore {
  std::map<std::pair<char, long>, BivarPoly> data;
  int loads = 0, hits = 0, saves = 0;
  std::optional<BivarPoly> load(char kind, long n) override {
    ++loads;
    auto it = data.find({kind, n});
    if (it == data.end()) return std::nullopt;
    ++hits;
    return it->second;
  }
  void save(char kind, long n, const BivarPoly& p) override {
    ++saves;
    data[{kind, n}] = p;
  }
};
}  // namespace

TEST(DivPoly, UsesBackingStore) {
  auto store = std::make_shared<CountingStore>();
  {
    DivPolyCache cold(200, store);
    cold.defining_polynomial(9);
  }
  EXPECT_GT(store->saves, 0);
  DivPolyCache warm(200, store);
  const int before = store->hits;
  EXPECT_EQ(warm.defining_polynomial(9), DivPolyCache().defining_polynomial(9));
  EXPECT_GT(store->hits, before);
}
