#include "modunits/divpoly.hpp"

#include <string>
#include <utility>

#include "modunits/errors.hpp"

namespace modunits {

BivarPoly tate_discriminant() {
  static const BivarPoly d = [] {
    const BivarPoly quartic =
        parse_bivar("C^4 - 8*B*C^2 - 3*C^3 + 16*B^2 - 20*B*C + 3*C^2 + B - C");
    return BivarPoly::monomial(1, 3, 0) * quartic;
  }();
  return d;
}

DivPolyCache::DivPolyCache(long max_n, std::shared_ptr<PolyStore> store)
    : max_n_(max_n), store_(std::move(store)), disc_(tate_discriminant()) {
  const BivarPoly b = BivarPoly::B();
  p_.emplace(0, BivarPoly());
  p_.emplace(1, BivarPoly(1L));
  p_.emplace(2, -b);
  p_.emplace(3, -BivarPoly::monomial(1, 3, 0));
  p_.emplace(4, BivarPoly::monomial(1, 5, 1));
  f_.emplace(3, b);
}

void DivPolyCache::check_range(long n) const {
  if (n > max_n_ || n < -max_n_) {
    throw RangeError("n = " + std::to_string(n) + " exceeds the configured limit " +
                     std::to_string(max_n_));
  }
}

BivarPoly DivPolyCache::P(long n) {
  check_range(n);
  std::lock_guard lock(mu_);
  if (n < 0) return -p_locked(-n);
  return p_locked(n);
}

const BivarPoly& DivPolyCache::p_locked(long n) {
  if (auto it = p_.find(n); it != p_.end()) return it->second;
  if (store_) {
    if (auto loaded = store_->load('P', n)) return p_.emplace(n, std::move(*loaded)).first->second;
  }
  BivarPoly result;
  if (n % 2 == 1) {
    // psi_{2l+1} = psi_{l+2} psi_l^3 - psi_{l+1}^3 psi_{l-1}
    const long l = (n - 1) / 2;
    result = p_locked(l + 2) * p_locked(l).pow(3) - p_locked(l + 1).pow(3) * p_locked(l - 1);
  } else {
    // psi_{2l} = psi_2^{-1} psi_l (psi_{l+2} psi_{l-1}^2 - psi_{l-2} psi_{l+1}^2)
    const long l = n / 2;
    const BivarPoly inner =
        p_locked(l + 2) * p_locked(l - 1).pow(2) - p_locked(l - 2) * p_locked(l + 1).pow(2);
    // Division by psi_2 = -B is exact for the Tate form; NotDivisible here
    // would mean the recurrence itself was broken.
    result = div_exact(p_locked(l) * inner, p_locked(2));
  }
  if (store_) store_->save('P', n, result);
  return p_.emplace(n, std::move(result)).first->second;
}

RatPoly DivPolyCache::F2() const { return RatPoly(BivarPoly::monomial(1, 4, 0), disc_); }

std::variant<BivarPoly, RatPoly> DivPolyCache::F(long n) {
  if (n < 2) throw BadIndex("F(n) needs n >= 2, got " + std::to_string(n));
  if (n == 2) return F2();
  return defining_polynomial(n);
}

BivarPoly DivPolyCache::defining_polynomial(long n) {
  if (n < 3) throw BadIndex("defining_polynomial needs n >= 3, got " + std::to_string(n));
  check_range(n);
  std::lock_guard lock(mu_);
  return f_locked(n);
}

const BivarPoly& DivPolyCache::f_locked(long n) {
  if (auto it = f_.find(n); it != f_.end()) return it->second;
  if (store_) {
    if (auto loaded = store_->load('F', n)) return f_.emplace(n, std::move(*loaded)).first->second;
  }
  std::vector<BivarPoly> mods;
  mods.reserve(static_cast<std::size_t>(n));
  mods.push_back(disc_);
  for (long d = 2; d < n; ++d) mods.push_back(p_locked(d));
  BivarPoly result = remove_common(p_locked(n), mods);
  if (store_) store_->save('F', n, result);
  return f_.emplace(n, std::move(result)).first->second;
}

namespace {

// Divides f by g as long as the division is exact; returns the multiplicity.
long strip(BivarPoly& f, const BivarPoly& g) {
  long k = 0;
  while (true) {
    try {
      f = div_exact(f, g);
    } catch (const NotDivisible&) {
      return k;
    }
    ++k;
  }
}

}  // namespace

PFactorization DivPolyCache::factor_P_over_F(long n) {
  if (n < 2) throw BadIndex("factor_P_over_F needs n >= 2, got " + std::to_string(n));
  check_range(n);
  std::lock_guard lock(mu_);
  PFactorization fac;
  BivarPoly rest = p_locked(n);
  for (long d = 4; d <= n; ++d) {
    const long a = strip(rest, f_locked(d));
    if (a != 0) fac.f_exponents[d] = a;
  }
  // D = B^3 * Q with Q irreducible: Q^k = D^k B^(-3k).
  const BivarPoly q = div_exact(disc_, BivarPoly::monomial(1, 3, 0));
  fac.d_exponent = strip(rest, q);
  const long b_power = strip(rest, BivarPoly::B()) - 3 * fac.d_exponent;
  if (b_power != 0) fac.f_exponents[3] = b_power;
  if (!rest.is_constant() || abs(rest.constant_term()) != 1) {
    throw FactorizationIncomplete("P(" + std::to_string(n) + ") leaves cofactor " + to_text(rest));
  }
  fac.sign = rest.constant_term() > 0 ? 1 : -1;
  return fac;
}

BivarPoly expand(const PFactorization& fac, DivPolyCache& cache) {
  // Negative exponents only ever occur on B (from D = B^3 Q); collect them as a
  // single division at the end.
  BivarPoly num(static_cast<long>(fac.sign));
  BivarPoly den(1L);
  auto apply = [&](const BivarPoly& base, long e) {
    if (e >= 0) {
      num *= base.pow(static_cast<unsigned>(e));
    } else {
      den *= base.pow(static_cast<unsigned>(-e));
    }
  };
  for (const auto& [d, a] : fac.f_exponents) apply(cache.defining_polynomial(d), a);
  apply(cache.discriminant(), fac.d_exponent);
  return div_exact(num, den);
}

}  // namespace modunits
