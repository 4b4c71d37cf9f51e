#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace modunits {

// Truncated Puiseux series in x = q^(1/denom) with rational coefficients:
//
//   sum_{j < L} coeffs[j] x^(ord + j)  +  O(x^prec),   ord + L = prec.
//
// Nonzero series are normalized so that coeffs[0] != 0. A series that is zero
// to its precision has no coefficients and ord == prec.
//
// Precision is tracked pessimistically: no operation produces a coefficient
// that is not determined by its inputs.
class QSeries {
 public:
  // 0 + O(q^0).
  QSeries() = default;

  // Builds sum coeffs[j] x^(ord + j) + O(x^(ord + coeffs.size())).
  QSeries(int denom, long ord, std::vector<mpq_class> coeffs);
  // Same, with an explicit precision; coefficients at or beyond prec are
  // dropped and missing ones are taken to be zero.
  QSeries(int denom, long ord, std::vector<mpq_class> coeffs, long prec);

  static QSeries zero(int denom, long prec);
  static QSeries one(int denom, long prec);
  // c * x^exponent + O(x^prec).
  static QSeries monomial(const mpq_class& c, long exponent, int denom, long prec);

  [[nodiscard]] int denom() const { return denom_; }
  [[nodiscard]] long ord() const { return ord_; }
  [[nodiscard]] long prec() const { return prec_; }
  // Number of known coefficients, prec - ord.
  [[nodiscard]] long relative_prec() const { return prec_ - ord_; }
  [[nodiscard]] const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const mpq_class& lead() const { return coeffs_.front(); }

  // Coefficient of x^exponent; zero below ord. Throws InsufficientPrecision at
  // or beyond prec.
  [[nodiscard]] mpq_class coeff(long exponent) const;

  // Re-expresses the series in x' = q^(1/new_denom); new_denom must be a
  // multiple of denom.
  [[nodiscard]] QSeries rescale(int new_denom) const;
  // Lowers the precision to min(prec, new_prec).
  [[nodiscard]] QSeries truncate(long new_prec) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const mpq_class& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(QSeries a);
  friend QSeries operator*(QSeries a, const mpq_class& s) { return a *= s; }
  friend QSeries operator*(const QSeries& f, const QSeries& g);

  // Multiplies by x^shift (exact; precision shifts along).
  [[nodiscard]] QSeries shift(long shift) const;

  // Exact structural equality (same denom, ord, prec and coefficients).
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  void normalize();

  int denom_ = 1;
  long ord_ = 0;
  long prec_ = 0;
  std::vector<mpq_class> coeffs_;
};

// Multiplicative inverse; keeps the relative precision. Throws ZeroSeries.
QSeries inv(const QSeries& f);

// f^e by binary powering; e < 0 goes through inv.
QSeries pow_int(const QSeries& f, long e);

struct ReducedForm {
  mpq_class lead;      // alpha
  mpq_class lead_exp;  // r, as a rational power of q
  QSeries fstar;       // f / (alpha q^r), constant term 1
};

// f = lead * q^lead_exp * fstar. Throws ZeroSeries.
ReducedForm reduced_form(const QSeries& f);

// All stored coefficients are integers.
bool is_integral(const QSeries& f);
// Integral, and the stored coefficients have gcd 1. This only inspects the
// known window up to prec; it cannot certify the untruncated series.
bool is_primitive(const QSeries& f);

// Smallest exponent (in units of 1/denom) below min(f.prec, g.prec) where f
// and g differ, or nullopt when they agree on that window. Both series must
// share denom.
std::optional<long> first_difference(const QSeries& f, const QSeries& g);

// f and g agree on their common window.
bool agrees(const QSeries& f, const QSeries& g);

}  // namespace modunits
