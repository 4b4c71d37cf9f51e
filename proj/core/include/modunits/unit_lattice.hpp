#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "modunits/exp_vector.hpp"
#include "modunits/qseries.hpp"

namespace modunits {

// N * gcd(N, 2): the modulus of the second congruence defining S.
std::int64_t second_modulus(int N);

// sum e(k) in 12Z and sum k^2 e(k) in N gcd(N,2) Z.
bool is_in_S(const ExpVector& e);

struct LatticeBasis {
  int N = 0;
  std::vector<ExpVector> vectors;  // rows of an HNF basis
  mpz_class index;                 // [Z^m : S], the basis determinant
};

// Canonical (HNF) Z-basis of S at level N >= 4.
LatticeBasis basis_S(int N);

// Exponent vector of t = h_1^2 h_3 / h_2^3, folded into [1, m].
ExpVector t_to_h(int N);
// d = (t h_1)^12.
ExpVector d_to_h(int N);
// v = t^(gcd(2,N) N).
ExpVector v_to_h(int N);

struct SignedExpVector {
  int sign = 1;
  ExpVector e;
  friend bool operator==(const SignedExpVector&, const SignedExpVector&) = default;
};

// p_n = sign * prod h_k^e(k) after folding t^(n^2-1) h_n / h_1. nullopt when
// n is a multiple of N, where p_n vanishes identically.
std::optional<SignedExpVector> p_to_h(long n, int N);

// f = d^alpha (p_{N-m-1} / p_{m+1})^beta prod_k p_k^pexp(k).
struct PExpression {
  int N = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::vector<std::int64_t> pexp;  // over p_1 .. p_m
  friend bool operator==(const PExpression&, const PExpression&) = default;
};

// Throws NotInS when e fails either congruence.
PExpression to_p_expression(const ExpVector& e);

// Rewrites a p-expression over the Siegel basis through p_to_h and d_to_h.
// The accumulated sign of the folded p_n factors is returned alongside.
SignedExpVector expand_p_expression(const PExpression& p);

// Recovers e from the reduced form of prod h_(k/N,0)^e(k) by peeling off one
// h_star at a time. fstar must have denom N, constant term 1, and known
// coefficients through x^m. Throws InsufficientPrecision, or NotAUnitProduct
// when the input is not such a product within its precision.
ExpVector decompose_series(const QSeries& fstar, int N);

// (1 / 12N^2) sum e(k) (6k^2 - 6kN + N^2), the q-exponent of the leading term.
mpq_class leading_exponent_value(const ExpVector& e);
// The leading exponent lies in (1/N)Z.
bool leading_exponent_check(const ExpVector& e);

}  // namespace modunits
