#include "modunits/curve_series.hpp"

#include <algorithm>
#include <vector>

#include "modunits/errors.hpp"
#include "modunits/siegel.hpp"
#include "modunits/unit_lattice.hpp"

namespace modunits {

long default_prec(int N) { return 15L * N; }

namespace {

QSeries series_of(const ExpVector& e, int sign, long prec) {
  QSeries s = product_series(e, prec).to_series();
  if (sign < 0) s = -s;
  return s;
}

QSeries p_series(long n, int N, long prec) {
  const auto pn = p_to_h(n, N);
  if (!pn) {
    // p_n is identically zero; report zero to the precision p_1 would carry.
    return QSeries::zero(N, prec);
  }
  return series_of(pn->e, pn->sign, prec);
}

}  // namespace

CurveExpansion::CurveExpansion(int N, long prec) : N_(N), prec_(prec) {
  if (N < 4) throw BadIndex("expand_curve needs N >= 4");
  // b has q-order 1/N and c = p_4 / b^5 needs b's leading term.
  if (prec < 2) throw InsufficientPrecision("expand_curve needs prec >= 2");
  const int m = N / 2;
  for (long n = 1; n <= m + 2; ++n) pcache_.emplace(n, p_series(n, N, prec));
  b_ = -p(2);
  if (b_.is_zero()) throw InsufficientPrecision("b vanishes to the requested precision");
  // At N = 4, p_4 = 0 identically and so is c.
  c_ = N == 4 ? QSeries::zero(N, b_.prec() + 1) : p(4) * inv(pow_int(b_, 5));
  if (N != 4 && c_.is_zero()) throw InsufficientPrecision("c vanishes to the requested precision");
  d_ = series_of(d_to_h(N), 1, prec);
}

QSeries CurveExpansion::p(long n) const {
  if (auto it = pcache_.find(n); it != pcache_.end()) return it->second;
  return p_series(n, N_, prec_);
}

QSeries CurveExpansion::v() const { return series_of(v_to_h(N_), 1, prec_); }

QSeries CurveExpansion::evaluate(const BivarPoly& poly) const {
  // b^i c^j has order i ob + j oc and is known to that plus rel; with positive
  // orders every nonconstant term is exact below min(ob, oc) + rel.
  if (b_.ord() < 1 || c_.ord() < 1) throw Error("evaluate needs b and c of positive q-order");
  // c = 0 exactly at N = 4 and carries no relative precision.
  const long rel = c_.is_zero() ? b_.relative_prec() : std::min(b_.relative_prec(), c_.relative_prec());
  const long target = std::min(b_.ord(), c_.ord()) + rel;
  QSeries acc = QSeries::zero(N_, target);
  if (poly.is_zero()) return acc;
  // Powers truncated to target; terms of order >= target contribute nothing.
  std::vector<QSeries> bp{QSeries::one(N_, target)};
  std::vector<QSeries> cp{QSeries::one(N_, target)};
  const unsigned db = poly.degB();
  const unsigned dc = poly.degC();
  for (unsigned i = 1; i <= db; ++i) {
    if (bp.back().is_zero()) break;
    bp.push_back((bp.back() * b_).truncate(target));
  }
  for (unsigned j = 1; j <= dc; ++j) {
    if (cp.back().is_zero()) break;
    cp.push_back((cp.back() * c_).truncate(target));
  }
  for (const auto& t : poly.terms()) {
    if (t.mono.degB >= bp.size() || t.mono.degC >= cp.size()) continue;
    const QSeries& x = bp[t.mono.degB];
    const QSeries& y = cp[t.mono.degC];
    if (x.is_zero() || y.is_zero() || x.ord() + y.ord() >= target) continue;
    acc += ((x * y).truncate(target)) * mpq_class(t.coeff);
  }
  return acc.truncate(target);
}

namespace {

CheckResult compare(std::string name, const CurveExpansion& ex, std::optional<long> n,
                    const QSeries& lhs, const QSeries& rhs) {
  CheckResult r;
  r.check = std::move(name);
  r.N = ex.N();
  r.n = n;
  r.prec = ex.prec();
  r.window = std::min(lhs.prec(), rhs.prec());
  r.first_failing_exponent = first_difference(lhs, rhs);
  r.pass = !r.first_failing_exponent.has_value();
  return r;
}

}  // namespace

CheckResult check_defining_equation(const CurveExpansion& ex, DivPolyCache& cache) {
  const QSeries value = ex.evaluate(cache.defining_polynomial(ex.N()));
  return compare("defining_equation", ex, std::nullopt, value, QSeries::zero(ex.N(), value.prec()));
}

CheckResult check_p_consistency(const CurveExpansion& ex, long n, DivPolyCache& cache) {
  const QSeries lhs = ex.evaluate(cache.P(n));
  QSeries rhs = ex.p(n);
  if (rhs.is_zero()) rhs = QSeries::zero(ex.N(), lhs.prec());
  return compare("p_consistency", ex, n, lhs, rhs);
}

CheckResult check_d_consistency(const CurveExpansion& ex, DivPolyCache& cache) {
  return compare("d_consistency", ex, std::nullopt, ex.evaluate(cache.discriminant()), ex.d());
}

CheckResult check_express2(const CurveExpansion& ex) {
  const int N = ex.N();
  const int m = N / 2;
  const long partner = N % 2 == 1 ? m : m - 1;
  return compare("express2", ex, m + 1, ex.p(m + 1), ex.v() * ex.p(partner));
}

}  // namespace modunits
