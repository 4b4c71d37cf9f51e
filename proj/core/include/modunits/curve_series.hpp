#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "modunits/bivar_poly.hpp"
#include "modunits/divpoly.hpp"
#include "modunits/qseries.hpp"

namespace modunits {

// b, c, d and p_n on X^1(N) as rational q-series, built from Siegel products:
// p_n from its folded exponent vector, b = -p_2, c = p_4 / b^5, d = (t h_1)^12.
class CurveExpansion {
 public:
  // prec is the relative precision of every Siegel product involved; the
  // default callers use is 15 N. Populates p_n for 1 <= n <= m + 2.
  CurveExpansion(int N, long prec);

  [[nodiscard]] int N() const { return N_; }
  [[nodiscard]] long prec() const { return prec_; }
  [[nodiscard]] const QSeries& b() const { return b_; }
  [[nodiscard]] const QSeries& c() const { return c_; }
  [[nodiscard]] const QSeries& d() const { return d_; }
  [[nodiscard]] const std::map<long, QSeries>& pcache() const { return pcache_; }

  // p_n from the Siegel dictionary; zero to precision when N | n. Served from
  // pcache when present, computed otherwise (the object is not modified).
  [[nodiscard]] QSeries p(long n) const;
  // v = t^(gcd(2,N) N) as a series.
  [[nodiscard]] QSeries v() const;

  // P(b, c) for a polynomial P.
  [[nodiscard]] QSeries evaluate(const BivarPoly& poly) const;

 private:
  int N_;
  long prec_;
  QSeries b_, c_, d_;
  std::map<long, QSeries> pcache_;
};

inline CurveExpansion expand_curve(int N, long prec) { return CurveExpansion(N, prec); }

// 15 N.
long default_prec(int N);

// Outcome of one identity check, "verified to O(q^(window/N))".
struct CheckResult {
  std::string check;
  int N = 0;
  std::optional<long> n;
  long prec = 0;
  bool pass = false;
  // Exponent numerator (over N) of the first disagreeing coefficient.
  std::optional<long> first_failing_exponent;
  // Exponent numerator up to which both sides were compared.
  long window = 0;
  // Free-form note for checks that are not series comparisons.
  std::string detail;
};

// F_N(b, c) vanishes to tracked precision.
CheckResult check_defining_equation(const CurveExpansion& ex, DivPolyCache& cache);
// P_n(b, c) equals the p_n series (both vanish when N | n).
CheckResult check_p_consistency(const CurveExpansion& ex, long n, DivPolyCache& cache);
// D(b, c) equals the d series.
CheckResult check_d_consistency(const CurveExpansion& ex, DivPolyCache& cache);
// p_{m+1} = v p_m (N odd) or v p_{m-1} (N even).
CheckResult check_express2(const CurveExpansion& ex);

}  // namespace modunits
