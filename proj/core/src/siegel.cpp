#include "modunits/siegel.hpp"

#include <string>
#include <vector>

#include "modunits/errors.hpp"

namespace modunits {

namespace {

void require_index(int k, int N) {
  if (N < 4) throw BadIndex("level N must be >= 4, got " + std::to_string(N));
  if (k < 1 || 2 * k > N) {
    throw BadIndex("Siegel index k = " + std::to_string(k) + " outside [1, " +
                   std::to_string(N / 2) + "] at level " + std::to_string(N));
  }
}

// c *= (1 - x^e), truncated to c.size() terms.
void mul_one_minus(std::vector<mpz_class>& c, long e) {
  if (e <= 0 || e >= static_cast<long>(c.size())) return;
  for (auto i = static_cast<long>(c.size()) - 1; i >= e; --i) {
    c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - e)];
  }
}

}  // namespace

QSeries h_star(int k, int N, long prec) {
  require_index(k, N);
  if (prec < 1) throw InsufficientPrecision("h_star needs prec >= 1");
  std::vector<mpz_class> c(static_cast<std::size_t>(prec));
  c[0] = 1;
  mul_one_minus(c, k);
  // Factor pairs n = 1 .. ceil(prec/N) + 1; every later factor is 1 + O(x^prec).
  const long last = (prec + N - 1) / N + 1;
  for (long n = 1; n <= last; ++n) {
    mul_one_minus(c, n * N + k);
    mul_one_minus(c, n * N - k);
  }
  std::vector<mpq_class> q(c.begin(), c.end());
  return QSeries(N, 0, std::move(q), prec);
}

mpq_class lead_exponent(int k, int N) {
  require_index(k, N);
  mpq_class v(6L * k * k - 6L * k * N + static_cast<long>(N) * N, 12L * N * N);
  v.canonicalize();
  return v;
}

std::optional<FoldedIndex> fold_index(long n, int N) {
  long r = n % N;
  if (r < 0) r += N;
  if (r == 0) return std::nullopt;
  const long shifts = (n - r) / N;
  FoldedIndex out;
  out.sign = (shifts % 2 == 0) ? 1 : -1;
  out.k = static_cast<int>(2 * r <= N ? r : N - r);
  return out;
}

SiegelProduct operator*(const SiegelProduct& a, const SiegelProduct& b) {
  if (a.N != b.N) throw PrecisionMismatch("SiegelProduct levels differ");
  SiegelProduct out;
  out.N = a.N;
  out.ipow = (a.ipow + b.ipow) % 4;
  out.scalar = a.scalar * b.scalar;
  out.lead_exp = a.lead_exp + b.lead_exp;
  out.fstar = a.fstar * b.fstar;
  if (a.provenance && b.provenance) out.provenance = *a.provenance + *b.provenance;
  return out;
}

QSeries SiegelProduct::to_series() const {
  if (!is_rational()) {
    throw PhaseNotRational("product carries i^" + std::to_string(ipow) +
                           "; its expansion is not rational");
  }
  const mpq_class scaled = lead_exp * N;
  if (scaled.get_den() != 1) {
    throw PrecisionMismatch("leading exponent is not a multiple of 1/" + std::to_string(N));
  }
  const mpq_class factor = ipow == 2 ? mpq_class(-scalar) : scalar;
  return (fstar * factor).shift(scaled.get_num().get_si());
}

SiegelProduct product_series(const ExpVector& e, long prec) {
  SiegelProduct out;
  out.N = e.N;
  out.fstar = QSeries::one(e.N, prec);
  out.provenance = e;
  std::int64_t total = 0;
  for (int k = 1; k <= e.m(); ++k) {
    const std::int64_t ek = e.at(k);
    total += ek;
    if (ek == 0) continue;
    out.lead_exp += mpq_class(ek) * lead_exponent(k, e.N);
    out.fstar = out.fstar * pow_int(h_star(k, e.N, prec), ek);
  }
  out.ipow = static_cast<int>(((total % 4) + 4) % 4);
  return out;
}

}  // namespace modunits
