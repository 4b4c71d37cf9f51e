#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace modunits {

// Dense univariate polynomial over Z, coefficients stored low to high with no
// trailing zeros. Used for the Z[B] coefficient ring inside the bivariate GCD
// and for specializations such as P_n(c, c).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<mpz_class> coeffs);
  UniPoly(long c);  // NOLINT: constants convert implicitly
  UniPoly(const mpz_class& c);  // NOLINT

  static UniPoly x();
  static UniPoly monomial(const mpz_class& c, unsigned degree);

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const mpz_class& lead() const { return c_.back(); }
  [[nodiscard]] mpz_class coeff(unsigned i) const;
  [[nodiscard]] const std::vector<mpz_class>& coeffs() const { return c_; }

  // Lowest index with a nonzero coefficient; the polynomial must be nonzero.
  [[nodiscard]] unsigned low_degree() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const mpz_class& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const mpz_class& s) { return a *= s; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  [[nodiscard]] UniPoly pow(unsigned e) const;
  [[nodiscard]] mpz_class evaluate(const mpz_class& x) const;
  [[nodiscard]] mpz_class content() const;
  [[nodiscard]] std::string to_string(char var = 'c') const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact quotient a / b in Z[x]; throws NotDivisible on a nonzero remainder or
// a non-integral quotient coefficient.
UniPoly div_exact(const UniPoly& a, const UniPoly& b);

// Divides every coefficient by s exactly.
UniPoly div_exact(const UniPoly& a, const mpz_class& s);

// gcd in Z[x]: primitive part has positive leading coefficient, content is the
// integer gcd of the inputs' contents. gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace modunits
