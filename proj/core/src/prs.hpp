#pragma once

// Subresultant polynomial remainder sequence over a GCD domain R.
//
// Polynomials are dense vectors of R, low degree first, no trailing zeros.
// R must provide: is_zero(r), ring_gcd(a, b), ring_divexact(a, b), ring_one(r),
// and the arithmetic operators *, *=, -=.

#include <gmpxx.h>

#include <cassert>
#include <utility>
#include <vector>

#include "modunits/upoly.hpp"

namespace modunits::detail {

inline bool is_zero(const mpz_class& a) { return a == 0; }
inline mpz_class ring_one(const mpz_class&) { return 1; }
inline mpz_class ring_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline mpz_class ring_divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Z[B] as a coefficient ring.
inline bool is_zero(const UniPoly& a) { return a.is_zero(); }
inline UniPoly ring_one(const UniPoly&) { return UniPoly(1L); }
inline UniPoly ring_gcd(const UniPoly& a, const UniPoly& b) { return gcd(a, b); }
inline UniPoly ring_divexact(const UniPoly& a, const UniPoly& b) { return div_exact(a, b); }

template <class R>
using Dense = std::vector<R>;

template <class R>
int deg(const Dense<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
void trim(Dense<R>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
R ring_pow(const R& base, int e) {
  R result = ring_one(base);
  R b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

template <class R>
R content(const Dense<R>& p) {
  R g{};
  for (const R& c : p) g = ring_gcd(g, c);
  return g;
}

template <class R>
void divide_coeffs(Dense<R>& p, const R& s) {
  for (R& c : p) c = ring_divexact(c, s);
}

// lc(b)^(deg a - deg b + 1) * a  mod  b.
template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b) {
  const int db = deg(b);
  const R& l = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const R c = a.back();
    const int shift = deg(a) - db;
    for (R& x : a) x *= l;
    for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    const R f = ring_pow(l, e);
    for (R& x : a) x *= f;
  }
  return a;
}

// gcd of two nonzero polynomials, up to a unit of R. The result is d * pp(S)
// where d = gcd(content a, content b) and S is the last nonzero subresultant.
template <class R>
Dense<R> subresultant_gcd(Dense<R> a, Dense<R> b) {
  assert(!a.empty() && !b.empty());
  if (deg(a) < deg(b)) std::swap(a, b);
  const R ca = content(a);
  const R cb = content(b);
  const R d = ring_gcd(ca, cb);
  divide_coeffs(a, ca);
  divide_coeffs(b, cb);

  R g = ring_one(d);
  R h = ring_one(d);
  while (true) {
    const int delta = deg(a) - deg(b);
    Dense<R> r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) {
      b = Dense<R>{ring_one(d)};
      break;
    }
    a = std::move(b);
    const R denom = g * ring_pow(h, delta);
    divide_coeffs(r, denom);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = ring_divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
  }
  divide_coeffs(b, content(b));
  for (R& c : b) c *= d;
  return b;
}

}  // namespace modunits::detail
