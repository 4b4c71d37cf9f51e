#include <utility>
#include <vector>

#include "modunits/bivar_poly.hpp"
#include "modunits/errors.hpp"
#include "prs.hpp"

namespace modunits {

namespace {

// Content of a polynomial in C over Z[B], normalized by UniPoly gcd.
UniPoly content_in_C(const std::vector<UniPoly>& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0 && g.lead() == 1) break;
  }
  return g;
}

std::vector<UniPoly> divide_by(const std::vector<UniPoly>& p, const UniPoly& c) {
  std::vector<UniPoly> out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(div_exact(x, c));
  return out;
}

}  // namespace

BivarPoly gcd(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd(0, 0) is undefined");
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);

  const std::vector<UniPoly> fc = f.as_poly_in_C();
  const std::vector<UniPoly> gc = g.as_poly_in_C();
  const UniPoly cont_f = content_in_C(fc);
  const UniPoly cont_g = content_in_C(gc);
  const UniPoly cont = gcd(cont_f, cont_g);

  std::vector<UniPoly> prim{UniPoly(1L)};
  if (fc.size() > 1 && gc.size() > 1) {
    prim = detail::subresultant_gcd<UniPoly>(divide_by(fc, cont_f), divide_by(gc, cont_g));
  }
  for (auto& c : prim) c *= cont;
  return normalize(BivarPoly::from_poly_in_C(prim));
}

BivarPoly remove_common(const BivarPoly& f, std::span<const BivarPoly> mods) {
  if (f.is_zero()) throw Error("remove_common: f must be nonzero");
  BivarPoly r = normalize(f);
  for (const BivarPoly& m : mods) {
    // Every polynomial divides 0, so a zero modulus carries no factor data.
    if (m.is_zero()) continue;
    // The irreducible factors of m that divide r all divide g = gcd(r, m), so
    // subsequent rounds may work against the smaller g instead of m.
    BivarPoly g = gcd(r, m);
    while (!g.is_constant()) {
      r = div_exact(r, g);
      g = gcd(r, g);
    }
  }
  return normalize(r);
}

RatPoly::RatPoly(BivarPoly num, BivarPoly den) {
  if (den.is_zero()) throw Error("RatPoly: zero denominator");
  if (num.is_zero()) {
    num_ = BivarPoly();
    den_ = BivarPoly(1L);
    return;
  }
  const BivarPoly g = gcd(num, den);
  num = div_exact(num, g);
  den = div_exact(den, g);
  mpz_class cn = num.content();
  mpz_class cd = den.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.grlex_c_lead().coeff < 0) c = -c;
  if (c != 1) {
    num = div_exact(num, BivarPoly(c));
    den = div_exact(den, BivarPoly(c));
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string to_text(const RatPoly& f) {
  if (f.den() == BivarPoly(1L)) return to_text(f.num());
  // Numerator bare when it is a single term; denominator always bracketed.
  const std::string num = f.num().size() == 1 ? to_text(f.num()) : "(" + to_text(f.num()) + ")";
  return num + " / (" + to_text(f.den()) + ")";
}

}  // namespace modunits
