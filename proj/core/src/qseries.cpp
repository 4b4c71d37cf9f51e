#include "modunits/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "modunits/errors.hpp"

namespace modunits {

namespace {

mpz_class common_denominator(const std::vector<mpq_class>& v) {
  mpz_class d = 1;
  for (const auto& c : v) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  }
  return d;
}

std::vector<mpz_class> scaled_numerators(const std::vector<mpq_class>& v, const mpz_class& d,
                                         std::size_t count) {
  std::vector<mpz_class> out(count);
  for (std::size_t i = 0; i < count && i < v.size(); ++i) {
    if (v[i] == 0) continue;
    mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] *= v[i].get_num();
  }
  return out;
}

void require_same_denom(const QSeries& f, const QSeries& g, const char* op) {
  if (f.denom() != g.denom()) {
    throw PrecisionMismatch(std::string(op) + ": exponent denominators differ (" +
                            std::to_string(f.denom()) + " vs " + std::to_string(g.denom()) +
                            "); rescale first");
  }
}

}  // namespace

QSeries::QSeries(int denom, long ord, std::vector<mpq_class> coeffs)
    : denom_(denom), ord_(ord), prec_(ord + static_cast<long>(coeffs.size())),
      coeffs_(std::move(coeffs)) {
  if (denom_ <= 0) throw Error("QSeries: denominator must be positive");
  normalize();
}

QSeries::QSeries(int denom, long ord, std::vector<mpq_class> coeffs, long prec)
    : denom_(denom), ord_(ord), prec_(prec), coeffs_(std::move(coeffs)) {
  if (denom_ <= 0) throw Error("QSeries: denominator must be positive");
  if (prec_ < ord_) {
    ord_ = prec_;
    coeffs_.clear();
  }
  coeffs_.resize(static_cast<std::size_t>(prec_ - ord_));
  normalize();
}

QSeries QSeries::zero(int denom, long prec) { return QSeries(denom, prec, {}, prec); }

QSeries QSeries::one(int denom, long prec) { return monomial(1, 0, denom, prec); }

QSeries QSeries::monomial(const mpq_class& c, long exponent, int denom, long prec) {
  if (exponent >= prec || c == 0) return zero(denom, prec);
  return QSeries(denom, exponent, {c}, prec);
}

void QSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    ord_ = prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    ord_ += static_cast<long>(lead);
  }
}

mpq_class QSeries::coeff(long exponent) const {
  if (exponent >= prec_) {
    throw InsufficientPrecision("coefficient of x^" + std::to_string(exponent) +
                                " requested from a series known to x^" + std::to_string(prec_));
  }
  if (exponent < ord_) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - ord_)];
}

QSeries QSeries::rescale(int new_denom) const {
  if (new_denom <= 0 || new_denom % denom_ != 0) {
    throw PrecisionMismatch("rescale: " + std::to_string(new_denom) + " is not a multiple of " +
                            std::to_string(denom_));
  }
  const long s = new_denom / denom_;
  if (s == 1) return *this;
  std::vector<mpq_class> c(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * static_cast<std::size_t>(s) + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j * static_cast<std::size_t>(s)] = coeffs_[j];
  return QSeries(new_denom, ord_ * s, std::move(c), prec_ * s);
}

QSeries QSeries::truncate(long new_prec) const {
  if (new_prec >= prec_) return *this;
  std::vector<mpq_class> c;
  if (new_prec > ord_) c.assign(coeffs_.begin(), coeffs_.begin() + (new_prec - ord_));
  return QSeries(denom_, std::min(ord_, new_prec), std::move(c), new_prec);
}

QSeries QSeries::shift(long s) const {
  QSeries out = *this;
  out.ord_ += s;
  out.prec_ += s;
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_denom(*this, o, "add");
  const long prec = std::min(prec_, o.prec_);
  const long ord = std::min(ord_, o.ord_);
  if (ord >= prec) {
    *this = zero(denom_, prec);
    return *this;
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(prec - ord));
  for (long e = ord; e < prec; ++e) {
    mpq_class& dst = c[static_cast<std::size_t>(e - ord)];
    if (e >= ord_ && e - ord_ < static_cast<long>(coeffs_.size())) dst = coeffs_[static_cast<std::size_t>(e - ord_)];
    if (e >= o.ord_ && e - o.ord_ < static_cast<long>(o.coeffs_.size())) dst += o.coeffs_[static_cast<std::size_t>(e - o.ord_)];
  }
  *this = QSeries(denom_, ord, std::move(c), prec);
  return *this;
}

QSeries operator-(QSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const mpq_class& s) {
  if (s == 0) {
    *this = zero(denom_, prec_);
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  require_same_denom(f, g, "mul");
  const long prec = std::min(f.prec_ + g.ord_, g.prec_ + f.ord_);
  if (f.is_zero() || g.is_zero()) return QSeries::zero(f.denom_, prec);
  const long ord = f.ord_ + g.ord_;
  const auto len = static_cast<std::size_t>(prec - ord);
  // Integer convolution on common-denominator numerators.
  const mpz_class df = common_denominator(f.coeffs_);
  const mpz_class dg = common_denominator(g.coeffs_);
  const auto a = scaled_numerators(f.coeffs_, df, std::min(len, f.coeffs_.size()));
  const auto b = scaled_numerators(g.coeffs_, dg, std::min(len, g.coeffs_.size()));
  std::vector<mpz_class> acc(len);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  const mpz_class d = df * dg;
  std::vector<mpq_class> c(len);
  for (std::size_t k = 0; k < len; ++k) {
    c[k] = mpq_class(acc[k], d);
    c[k].canonicalize();
  }
  return QSeries(f.denom_, ord, std::move(c), prec);
}

QSeries inv(const QSeries& f) {
  if (f.is_zero()) throw ZeroSeries();
  const long rel = f.relative_prec();
  const auto len = static_cast<std::size_t>(rel);
  const auto& c = f.coeffs();
  std::vector<mpq_class> r(len);
  const mpq_class inv0 = 1 / c[0];
  r[0] = inv0;
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k && j < c.size(); ++j) {
      if (c[j] != 0) s += c[j] * r[k - j];
    }
    r[k] = -s * inv0;
  }
  return QSeries(f.denom(), -f.ord(), std::move(r), -f.ord() + rel);
}

QSeries pow_int(const QSeries& f, long e) {
  if (e == 0) {
    // Known to the same relative precision as f.
    return QSeries::one(f.denom(), f.is_zero() ? f.prec() : f.relative_prec());
  }
  if (e < 0) return pow_int(inv(f), -e);
  QSeries result;
  bool have = false;
  QSeries b = f;
  while (e > 0) {
    if (e & 1) {
      result = have ? result * b : b;
      have = true;
    }
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

ReducedForm reduced_form(const QSeries& f) {
  if (f.is_zero()) throw ZeroSeries();
  const mpq_class lead = f.lead();
  std::vector<mpq_class> c = f.coeffs();
  for (auto& x : c) x /= lead;
  mpq_class lead_exp(f.ord(), f.denom());
  lead_exp.canonicalize();
  return {lead, lead_exp, QSeries(f.denom(), 0, std::move(c), f.relative_prec())};
}

bool is_integral(const QSeries& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [](const mpq_class& c) { return c.get_den() == 1; });
}

bool is_primitive(const QSeries& f) {
  if (!is_integral(f)) return false;
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (g == 1) return true;
  }
  return false;
}

std::optional<long> first_difference(const QSeries& f, const QSeries& g) {
  require_same_denom(f, g, "compare");
  const long window = std::min(f.prec(), g.prec());
  for (long e = std::min(f.ord(), g.ord()); e < window; ++e) {
    if (f.coeff(e) != g.coeff(e)) return e;
  }
  return std::nullopt;
}

bool agrees(const QSeries& f, const QSeries& g) { return !first_difference(f, g).has_value(); }

}  // namespace modunits
