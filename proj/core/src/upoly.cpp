#include "modunits/upoly.hpp"

#include <sstream>
#include <utility>

#include "modunits/errors.hpp"
#include "prs.hpp"

namespace modunits {

UniPoly::UniPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

UniPoly::UniPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UniPoly::UniPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::x() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const mpz_class& c, unsigned degree) {
  UniPoly p;
  if (c != 0) {
    p.c_.assign(degree + 1, mpz_class(0));
    p.c_[degree] = c;
  }
  return p;
}

mpz_class UniPoly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : mpz_class(0);
}

unsigned UniPoly::low_degree() const {
  unsigned i = 0;
  while (c_[i] == 0) ++i;
  return i;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::operator*=(const mpz_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(1L);
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return result;
}

mpz_class UniPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class UniPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

UniPoly div_exact(const UniPoly& a, const mpz_class& s) {
  std::vector<mpz_class> r = a.coeffs();
  for (auto& c : r) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t())) throw NotDivisible();
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return UniPoly(std::move(r));
}

UniPoly div_exact(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw NotDivisible();
  if (a.is_zero()) return {};
  if (b.degree() == 0) return div_exact(a, b.lead());
  if (a.degree() < b.degree()) throw NotDivisible();
  std::vector<mpz_class> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) throw NotDivisible();
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
    const int shift = i - db;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(shift)] = std::move(t);
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) throw NotDivisible();
  }
  return UniPoly(std::move(q));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  UniPoly g;
  if (a.is_zero()) {
    g = b;
  } else if (b.is_zero()) {
    g = a;
  } else {
    g = UniPoly(detail::subresultant_gcd<mpz_class>(a.coeffs(), b.coeffs()));
  }
  if (g.lead() < 0) g = -g;
  return g;
}

}  // namespace modunits
