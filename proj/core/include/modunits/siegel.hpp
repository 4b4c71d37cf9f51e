#pragma once

#include <gmpxx.h>

#include <optional>

#include "modunits/exp_vector.hpp"
#include "modunits/qseries.hpp"

namespace modunits {

// Reduced q-expansion of the Siegel function h_(k/N,0), i.e.
// (1 - x^k) prod_{n>=1} (1 - x^(nN+k)) (1 - x^(nN-k)) with x = q^(1/N),
// known modulo x^prec. Requires N >= 4, 1 <= k <= N/2, prec >= 1.
QSeries h_star(int k, int N, long prec);

// (a^2 - a + 1/6) / 2 at a = k/N: the q-exponent of the leading term of h_(k/N,0).
mpq_class lead_exponent(int k, int N);

struct FoldedIndex {
  int k = 0;     // in [1, N/2]
  int sign = 1;  // h_(n/N,0) = sign * h_(k/N,0)
  friend bool operator==(const FoldedIndex&, const FoldedIndex&) = default;
};

// Rewrites h_(n/N,0) as +-h_(k/N,0) with 1 <= k <= N/2. nullopt when n is a
// multiple of N (no Siegel function there).
std::optional<FoldedIndex> fold_index(long n, int N);

// scalar * i^ipow * q^lead_exp * fstar, fstar with constant term 1.
struct SiegelProduct {
  int N = 0;
  int ipow = 0;  // in [0, 4)
  mpq_class scalar = 1;
  mpq_class lead_exp = 0;
  QSeries fstar;
  std::optional<ExpVector> provenance;

  friend SiegelProduct operator*(const SiegelProduct& a, const SiegelProduct& b);

  // True when the expansion has rational coefficients (i^ipow = +-1).
  [[nodiscard]] bool is_rational() const { return ipow % 2 == 0; }

  // Plain series in q^(1/N). Throws PhaseNotRational for odd ipow and
  // PrecisionMismatch when lead_exp is not in (1/N)Z.
  [[nodiscard]] QSeries to_series() const;
};

// prod_k h_(k/N,0)^e(k) with fstar known to relative precision prec.
SiegelProduct product_series(const ExpVector& e, long prec);

}  // namespace modunits
