#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modunits/upoly.hpp"

namespace modunits {

struct Monomial {
  unsigned degB = 0;
  unsigned degC = 0;

  [[nodiscard]] unsigned total() const { return degB + degC; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Storage / display order: higher total degree first, ties broken by higher
// B-degree. This is a term order (graded lex with B > C), so the first stored
// term doubles as the leading term for division.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.degB > b.degB;
  }
};

struct Term {
  Monomial mono;
  mpz_class coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in Z[B, C]. Terms are kept in MonomialOrder with no zero
// coefficients; the zero polynomial has no terms.
class BivarPoly {
 public:
  BivarPoly() = default;
  // Takes terms in any order; merges duplicates and drops zeros.
  explicit BivarPoly(std::vector<Term> terms);
  BivarPoly(long c);  // NOLINT: integer constants convert implicitly
  BivarPoly(const mpz_class& c);  // NOLINT

  static BivarPoly B();
  static BivarPoly C();
  static BivarPoly monomial(const mpz_class& coeff, unsigned degB, unsigned degC);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  // Constant term (0 when absent).
  [[nodiscard]] mpz_class constant_term() const;
  [[nodiscard]] mpz_class coeff(unsigned degB, unsigned degC) const;

  [[nodiscard]] unsigned degB() const;
  [[nodiscard]] unsigned degC() const;
  [[nodiscard]] unsigned total_degree() const;

  // Leading term under graded lex with C > B. Used for sign normalization.
  [[nodiscard]] const Term& grlex_c_lead() const;

  // gcd of all coefficients (0 for the zero polynomial).
  [[nodiscard]] mpz_class content() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const BivarPoly& o);
  BivarPoly& operator*=(const mpz_class& s);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(BivarPoly a, const mpz_class& s) { return a *= s; }
  friend BivarPoly operator-(BivarPoly a);
  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

  [[nodiscard]] BivarPoly pow(unsigned e) const;

  [[nodiscard]] mpz_class evaluate(const mpz_class& b, const mpz_class& c) const;
  // Specialization B -> b(x), C -> c(x).
  [[nodiscard]] UniPoly substitute(const UniPoly& b, const UniPoly& c) const;

  // View as a polynomial in C with coefficients in Z[B]: result[j] is the
  // coefficient of C^j.
  [[nodiscard]] std::vector<UniPoly> as_poly_in_C() const;
  static BivarPoly from_poly_in_C(const std::vector<UniPoly>& coeffs);

 private:
  explicit BivarPoly(std::vector<Term> sorted_terms, bool /*already_canonical*/)
      : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

// Exact quotient f / g in Z[B, C]. Throws NotDivisible when g does not divide
// f or when the quotient would need non-integral coefficients.
BivarPoly div_exact(const BivarPoly& f, const BivarPoly& g);

// Primitive, with positive leading coefficient under grlex(C > B). The zero
// polynomial normalizes to itself.
BivarPoly normalize(const BivarPoly& f);

// Greatest common divisor in Z[B, C], returned normalized. Requires at least
// one nonzero argument.
BivarPoly gcd(const BivarPoly& f, const BivarPoly& g);

// Strips from f every nonconstant factor it shares with any element of mods,
// with full multiplicity. Result is normalized.
BivarPoly remove_common(const BivarPoly& f, std::span<const BivarPoly> mods);

// Canonical text, e.g. "B*C^2 - 2*B^2 + 3*B*C - C^2".
std::string to_text(const BivarPoly& f);
// Accepts the canonical text form; whitespace and term order are free.
BivarPoly parse_bivar(std::string_view text);

// Element of Q(B, C) held as num / den with gcd(num, den) constant, integer
// contents cancelled, and den positive-leading under grlex(C > B).
class RatPoly {
 public:
  RatPoly(BivarPoly num, BivarPoly den);

  [[nodiscard]] const BivarPoly& num() const { return num_; }
  [[nodiscard]] const BivarPoly& den() const { return den_; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  BivarPoly num_;
  BivarPoly den_;
};

std::string to_text(const RatPoly& f);

}  // namespace modunits
