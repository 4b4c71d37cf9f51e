#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "modunits/bivar_poly.hpp"

namespace modunits {

// Persistent backing store for computed polynomials; kind is 'P' or 'F'.
// Implementations must be safe to call from the thread holding the cache lock.
class PolyStore {
 public:
  virtual ~PolyStore() = default;
  virtual std::optional<BivarPoly> load(char kind, long n) = 0;
  virtual void save(char kind, long n, const BivarPoly& poly) = 0;
};

// Discriminant of the Tate normal form,
// B^3 (C^4 - 8BC^2 - 3C^3 + 16B^2 - 20BC + 3C^2 + B - C).
BivarPoly tate_discriminant();

// P(n) = -P(-n) expressed as sign * prod F_d^a_d * D^a_D, with F_3 = B.
struct PFactorization {
  int sign = 1;
  std::map<long, long> f_exponents;  // d -> a_d, d >= 3
  long d_exponent = 0;               // a_D
};

// Division polynomials of the Tate normal form evaluated at (0, 0), and the
// defining polynomials F_n derived from them. Results are memoized; all public
// members are thread-safe.
class DivPolyCache {
 public:
  static constexpr long kDefaultMaxN = 200;

  explicit DivPolyCache(long max_n = kDefaultMaxN, std::shared_ptr<PolyStore> store = nullptr);

  DivPolyCache(const DivPolyCache&) = delete;
  DivPolyCache& operator=(const DivPolyCache&) = delete;

  [[nodiscard]] long max_n() const { return max_n_; }

  BivarPoly P(long n);
  [[nodiscard]] const BivarPoly& discriminant() const { return disc_; }

  // F_2 = B^4 / D as a rational function; F_n for n >= 3 as a polynomial.
  std::variant<BivarPoly, RatPoly> F(long n);
  // F_n for n >= 3.
  BivarPoly defining_polynomial(long n);
  RatPoly F2() const;

  // Trial-divides P(n) by F_n, ..., F_4, then D / B^3, then B. Throws
  // FactorizationIncomplete when a nonconstant or non-unit cofactor remains.
  PFactorization factor_P_over_F(long n);

 private:
  void check_range(long n) const;
  const BivarPoly& p_locked(long n);
  const BivarPoly& f_locked(long n);

  long max_n_;
  std::shared_ptr<PolyStore> store_;
  BivarPoly disc_;
  std::recursive_mutex mu_;
  std::map<long, BivarPoly> p_;
  std::map<long, BivarPoly> f_;
};

// Multiplies a factorization back out; used to confirm factor_P_over_F.
BivarPoly expand(const PFactorization& fac, DivPolyCache& cache);

}  // namespace modunits
